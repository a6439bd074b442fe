#pragma once
/// @file commands.hpp
/// @brief The verification commands behind the CLI: each command assembles a
///        report of named checks from the core modules.  All randomness is
///        derived from the seed through labeled sub-streams, so a command's
///        report is a deterministic function of its options.

#include <cstdint>
#include <string>

#include "group_catalog.hpp"
#include "report.hpp"

namespace rbv {

const char* tool_version();

struct CommandOptions {
  std::string command;
  uint64_t seed = 42;
  double tol = -1.0;    // < 0: per-check defaults
  long samples = -1;    // < 0: per-check defaults
  long budget = 100000;  // evaluation budget for search probes
  std::string format = "json";
  std::string case_id;  // catalog case; empty = command-specific default
  std::string group;    // matrix model/group name for jprobe and poisson
  std::string algebra_text;
  std::string operator_text;
  std::string rmatrix_text;
  CatalogParams params;
};

/// Commands: check-rb classify2d graph matched-pair kappa verify-catalog
/// membership obstruction jprobe upsilon gamma bialgebra poisson suite.
Report run_command(const CommandOptions& options);

}  // namespace rbv
