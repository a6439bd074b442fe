#pragma once
/// @file linalg.hpp
/// @brief Shared dense linear-algebra aliases and small helpers.

#include <Eigen/Dense>
#include <cmath>

namespace rbv {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Largest absolute entry; 0 for empty objects.
inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vec& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// Standard basis vector e_i in dimension n.
inline Vec unit_vec(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1.0;
  return v;
}

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

/// Scale-aware singularity test: true when |det| is negligible relative to
/// the matrix magnitude (entry scale raised to the matrix dimension).
inline bool is_singular(const Mat& m, double rel = 1e-12) {
  const double scale = std::max(max_abs(m), 1.0);
  double s = 1.0;
  for (int i = 0; i < m.rows(); ++i) s *= scale;
  return std::abs(m.determinant()) <= rel * s;
}

}  // namespace rbv
