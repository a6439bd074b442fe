#include "formats.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "report.hpp"

namespace rbv {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_double(const Line& line, const std::string& tok) {
  double value = 0.0;
  const auto res =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    fail(line.number, "expected a number, got '" + tok + "'");
  }
  return value;
}

int parse_index(const Line& line, const std::string& tok, int dim,
                const char* what) {
  int value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    fail(line.number, std::string("expected an integer ") + what + ", got '" +
                          tok + "'");
  }
  if (value < 1 || value > dim) {
    fail(line.number, std::string(what) + " " + tok + " out of range 1.." +
                          std::to_string(dim));
  }
  return value;
}

int parse_dim(const Line& line, const std::string& tok) {
  int value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() ||
      value < 1 || value > kMaxDim) {
    fail(line.number,
         "dim must be an integer in 1.." + std::to_string(kMaxDim));
  }
  return value;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  std::string name = "custom";
  int dim = -1;
  std::vector<StructEntry> entries;
  // Duplicates are detected on the unordered pair: "bracket 2 1 2 -2" after
  // "bracket 1 2 2 2" re-specifies the same coefficient.
  std::set<std::tuple<int, int, int>> seen;

  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    if (kw == "algebra") {
      if (line.tokens.size() != 2) fail(line.number, "usage: algebra NAME");
      name = line.tokens[1];
    } else if (kw == "dim") {
      if (line.tokens.size() != 2) fail(line.number, "usage: dim N");
      dim = parse_dim(line, line.tokens[1]);
    } else if (kw == "bracket") {
      if (dim < 0) fail(line.number, "dim must appear before bracket lines");
      if (line.tokens.size() != 5) {
        fail(line.number, "usage: bracket i j k VALUE");
      }
      const int i = parse_index(line, line.tokens[1], dim, "index i");
      const int j = parse_index(line, line.tokens[2], dim, "index j");
      const int k = parse_index(line, line.tokens[3], dim, "index k");
      const double value = parse_double(line, line.tokens[4]);
      if (i == j && value != 0.0) {
        fail(line.number, "bracket [e_i, e_i] must vanish");
      }
      const auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
      if (!seen.insert(key).second) {
        fail(line.number, "duplicate bracket entry for (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ", " + std::to_string(k) + ")");
      }
      if (i != j) entries.push_back(StructEntry{i - 1, j - 1, k - 1, value});
    } else {
      fail(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (dim < 0) throw ParseError("algebra file needs a 'dim N' line");
  return LieAlgebra(name, dim, entries);
}

Mat parse_operator(const std::string& text) {
  std::vector<std::vector<double>> rows;
  bool saw_header = false;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] == "operator") {
      if (saw_header || !rows.empty()) {
        fail(line.number, "misplaced 'operator' header");
      }
      if (line.tokens.size() != 2) fail(line.number, "usage: operator NAME");
      saw_header = true;
      continue;
    }
    std::vector<double> row;
    for (const std::string& tok : line.tokens) {
      row.push_back(parse_double(line, tok));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(line.number, "rows have inconsistent lengths");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("operator file has no matrix rows");
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat parse_rmatrix(const std::string& text) {
  int dim = -1;
  Mat r;
  std::set<std::pair<int, int>> seen;
  for (const Line& line : tokenize(text)) {
    const std::string& kw = line.tokens[0];
    if (kw == "rmatrix") {
      if (line.tokens.size() != 2) fail(line.number, "usage: rmatrix NAME");
    } else if (kw == "dim") {
      if (line.tokens.size() != 2) fail(line.number, "usage: dim N");
      dim = parse_dim(line, line.tokens[1]);
      r = Mat::Zero(dim, dim);
    } else if (kw == "entry") {
      if (dim < 0) fail(line.number, "dim must appear before entry lines");
      if (line.tokens.size() != 4) fail(line.number, "usage: entry i j VALUE");
      const int i = parse_index(line, line.tokens[1], dim, "index i");
      const int j = parse_index(line, line.tokens[2], dim, "index j");
      if (!seen.insert({i, j}).second) {
        fail(line.number, "duplicate entry for (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
      r(i - 1, j - 1) = parse_double(line, line.tokens[3]);
    } else {
      fail(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (dim < 0) throw ParseError("r-matrix file needs a 'dim N' line");
  return r;
}

std::string format_algebra(const LieAlgebra& alg) {
  std::string out = "algebra " + alg.name() + "\n";
  out += "dim " + std::to_string(alg.dim()) + "\n";
  for (const StructEntry& e : alg.entries()) {
    out += "bracket " + std::to_string(e.i + 1) + " " +
           std::to_string(e.j + 1) + " " + std::to_string(e.k + 1) + " " +
           format_double17(e.value) + "\n";
  }
  return out;
}

std::string format_operator(const Mat& m, const std::string& name) {
  std::string out = "operator " + name + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += format_double17(m(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string format_rmatrix(const Mat& r, const std::string& name) {
  std::string out = "rmatrix " + name + "\n";
  out += "dim " + std::to_string(r.rows()) + "\n";
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      if (r(i, j) != 0.0) {
        out += "entry " + std::to_string(i + 1) + " " + std::to_string(j + 1) +
               " " + format_double17(r(i, j)) + "\n";
      }
    }
  }
  return out;
}

}  // namespace rbv
