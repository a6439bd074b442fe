#include "report.hpp"

#include <charconv>

#include "errors.hpp"

namespace rbv {

void Report::add(const std::string& name, const std::string& anchor,
                 double residual, double tolerance) {
  checks.push_back(Check{name, anchor, residual, tolerance,
                         residual <= tolerance});
}

void Report::add_margin(const std::string& name, const std::string& anchor,
                        double threshold, double found) {
  add(name, anchor, threshold - found, 0.0);
}

bool Report::all_pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  throw ArgumentError("unknown format '" + name + "' (expected json or text)");
}

std::string format_double17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string render_json(const Report& r) {
  std::string out = "{\n";
  out += "  \"tool_version\": \"" + json_escape(r.tool_version) + "\",\n";
  out += "  \"seed\": " + std::to_string(r.seed) + ",\n";
  out += "  \"checks\": [";
  for (size_t i = 0; i < r.checks.size(); ++i) {
    const Check& c = r.checks[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"name\": \"" + json_escape(c.name) + "\", ";
    out += "\"paper_anchor\": \"" + json_escape(c.paper_anchor) + "\", ";
    out += "\"residual\": " + format_double17(c.residual) + ", ";
    out += "\"tolerance\": " + format_double17(c.tolerance) + ", ";
    out += std::string("\"pass\": ") + (c.pass ? "true" : "false") + "}";
  }
  out += r.checks.empty() ? "],\n" : "\n  ],\n";
  out += std::string("  \"all_pass\": ") + (r.all_pass() ? "true" : "false") +
         "\n}\n";
  return out;
}

std::string render_text(const Report& r) {
  std::string out = "tool_version " + r.tool_version + "\n";
  out += "seed " + std::to_string(r.seed) + "\n";
  size_t passed = 0;
  for (const Check& c : r.checks) {
    if (c.pass) ++passed;
    out += "check\t" + c.name + "\t" + c.paper_anchor + "\t" +
           format_double17(c.residual) + "\t" + format_double17(c.tolerance) +
           "\t" + (c.pass ? "PASS" : "FAIL") + "\n";
  }
  out += "summary " + std::to_string(passed) + "/" +
         std::to_string(r.checks.size()) + " passed\n";
  out += std::string("all_pass ") + (r.all_pass() ? "true" : "false") + "\n";
  return out;
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(report)
                                      : render_text(report);
}

}  // namespace rbv
