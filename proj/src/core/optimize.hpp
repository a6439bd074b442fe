#pragma once
/// @file optimize.hpp
/// @brief Small derivative-free minimizer used by the numeric search probes:
///        multi-start Nelder-Mead with a compass-step polish, capped by an
///        evaluation budget.  Deterministic given the starting points.

#include <functional>
#include <vector>

#include "linalg.hpp"

namespace rbv {

struct OptimizeResult {
  Vec argmin;
  double value = 0.0;
  long evals = 0;
};

using Objective = std::function<double(const Vec&)>;

/// Runs Nelder-Mead from each start (plus compass polish on the incumbent)
/// until `budget` objective evaluations are spent or the incumbent value
/// drops to `stop_below`.  Returns the best point seen.
OptimizeResult minimize(const Objective& f, const std::vector<Vec>& starts,
                        long budget, double stop_below = -1.0);

}  // namespace rbv
