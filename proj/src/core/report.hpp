#pragma once
/// @file report.hpp
/// @brief Check records and deterministic report rendering (json / text).
///
/// Every numeric verdict is one check: a residual compared against a
/// tolerance (pass iff residual <= tolerance).  Lower-bound assertions are
/// encoded as margins: residual = threshold - found, tolerance = 0, so a
/// comfortable separation shows up as a negative residual.  Rendering uses
/// 17 significant digits and is byte-deterministic for identical inputs.

#include <cstdint>
#include <string>
#include <vector>

namespace rbv {

struct Check {
  std::string name;
  std::string paper_anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string tool_version;
  uint64_t seed = 0;
  std::vector<Check> checks;

  void add(const std::string& name, const std::string& anchor, double residual,
           double tolerance);
  /// Lower-bound check: found must stay >= threshold.
  void add_margin(const std::string& name, const std::string& anchor,
                  double threshold, double found);
  bool all_pass() const;
};

enum class ReportFormat { Json, Text };

ReportFormat parse_report_format(const std::string& name);

std::string render_report(const Report& report, ReportFormat format);

/// Shortest-exact-ish decimal rendering with 17 significant digits.
std::string format_double17(double v);

}  // namespace rbv
