#include "optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rbv {
namespace {

struct Budget {
  const Objective& f;
  long remaining;
  long used = 0;

  double eval(const Vec& x) {
    if (remaining <= 0) return std::numeric_limits<double>::infinity();
    --remaining;
    ++used;
    return f(x);
  }
  bool exhausted() const { return remaining <= 0; }
};

void nelder_mead(Budget& budget, const Vec& start, double simplex_scale,
                 double stop_below, OptimizeResult& best) {
  const int n = static_cast<int>(start.size());
  std::vector<Vec> pts;
  std::vector<double> vals;
  pts.reserve(n + 1);
  pts.push_back(start);
  for (int i = 0; i < n; ++i) {
    Vec p = start;
    p(i) += simplex_scale;
    pts.push_back(p);
  }
  for (const Vec& p : pts) {
    vals.push_back(budget.eval(p));
    if (vals.back() < best.value) {
      best.value = vals.back();
      best.argmin = p;
    }
  }

  std::vector<int> order(pts.size());
  for (int iter = 0; iter < 400 * n && !budget.exhausted(); ++iter) {
    if (best.value <= stop_below) return;
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    const int lo = order.front(), hi = order.back(),
              second_hi = order[order.size() - 2];
    if (vals[hi] - vals[lo] < 1e-15 * (1.0 + std::abs(vals[lo]))) break;

    Vec centroid = Vec::Zero(n);
    for (int idx : order) {
      if (idx != hi) centroid += pts[idx];
    }
    centroid /= static_cast<double>(n);

    auto accept = [&](const Vec& p, double v) {
      pts[hi] = p;
      vals[hi] = v;
      if (v < best.value) {
        best.value = v;
        best.argmin = p;
      }
    };

    const Vec refl = centroid + (centroid - pts[hi]);
    const double refl_val = budget.eval(refl);
    if (refl_val < vals[lo]) {
      const Vec expd = centroid + 2.0 * (centroid - pts[hi]);
      const double expd_val = budget.eval(expd);
      if (expd_val < refl_val) {
        accept(expd, expd_val);
      } else {
        accept(refl, refl_val);
      }
    } else if (refl_val < vals[second_hi]) {
      accept(refl, refl_val);
    } else {
      const Vec contr = centroid + 0.5 * (pts[hi] - centroid);
      const double contr_val = budget.eval(contr);
      if (contr_val < vals[hi]) {
        accept(contr, contr_val);
      } else {
        for (int idx : order) {
          if (idx == lo) continue;
          pts[idx] = pts[lo] + 0.5 * (pts[idx] - pts[lo]);
          vals[idx] = budget.eval(pts[idx]);
          if (vals[idx] < best.value) {
            best.value = vals[idx];
            best.argmin = pts[idx];
          }
        }
      }
    }
  }
}

void compass_polish(Budget& budget, double stop_below, OptimizeResult& best) {
  const int n = static_cast<int>(best.argmin.size());
  double step = 1e-2;
  while (step > 1e-13 && !budget.exhausted() && best.value > stop_below) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec p = best.argmin;
        p(i) += sign * step;
        const double v = budget.eval(p);
        if (v < best.value) {
          best.value = v;
          best.argmin = p;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.25;
  }
}

}  // namespace

OptimizeResult minimize(const Objective& f, const std::vector<Vec>& starts,
                        long budget, double stop_below) {
  OptimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  Budget b{f, budget};
  for (const Vec& start : starts) {
    if (best.argmin.size() == 0) {
      best.argmin = start;
      best.value = b.eval(start);
    }
    if (b.exhausted() || best.value <= stop_below) break;
    nelder_mead(b, start, 0.25, stop_below, best);
    compass_polish(b, stop_below, best);
  }
  best.evals = b.used;
  return best;
}

}  // namespace rbv
