#include "bialgebra.hpp"

#include <cmath>

#include "errors.hpp"

namespace rbv {
namespace {

void check_square(const LieAlgebra& alg, const Mat& r) {
  if (r.rows() != alg.dim() || r.cols() != alg.dim()) {
    throw DimensionError("r-matrix must be square of the algebra dimension");
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vec vec_of(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

}  // namespace

RMatrix make_rmatrix(const LieAlgebra& alg, const Mat& r) {
  check_square(alg, r);
  return RMatrix{alg, r};
}

RMatrix sl2_standard_rmatrix() {
  Mat r = Mat::Zero(3, 3);
  r(0, 0) = 0.25;  // h (x) h
  r(1, 2) = 1.0;   // e (x) f
  return RMatrix{sl2(), r};
}

Mat antisymmetric_part(const RMatrix& rm) {
  return 0.5 * (rm.r - rm.r.transpose());
}

Mat symmetric_part(const RMatrix& rm) {
  return 0.5 * (rm.r + rm.r.transpose());
}

Mat r_plus(const RMatrix& rm) { return rm.r.transpose(); }

Mat r_minus(const RMatrix& rm) { return -rm.r; }

Mat big_I(const RMatrix& rm) { return rm.r + rm.r.transpose(); }

double cybe_residual(const RMatrix& rm) {
  const int n = rm.alg.dim();
  const Mat& r = rm.r;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double t = 0.0;
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            // [r12, r13] + [r12, r23] + [r13, r23]
            t += r(a, j) * r(b, k) * rm.alg.c(a, b, i);
            t += r(i, a) * r(b, k) * rm.alg.c(a, b, j);
            t += r(i, a) * r(j, b) * rm.alg.c(a, b, k);
          }
        }
        worst = std::max(worst, std::abs(t));
      }
    }
  }
  return worst;
}

double invariance_residual(const RMatrix& rm) {
  const int n = rm.alg.dim();
  const Mat s = symmetric_part(rm);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        double t = 0.0;
        for (int k = 0; k < n; ++k) {
          t += rm.alg.c(m, k, i) * s(k, j) + rm.alg.c(m, k, j) * s(i, k);
        }
        worst = std::max(worst, std::abs(t));
      }
    }
  }
  return worst;
}

bool is_factorizable(const RMatrix& rm) {
  return !is_singular(big_I(rm), 1e-8);
}

LieAlgebra dual_algebra(const RMatrix& rm) {
  const int n = rm.alg.dim();
  const Mat& r = rm.r;
  // d[a][b][c] = coefficient of e^c in [e^a, e^b].
  std::vector<double> d(static_cast<size_t>(n) * n * n, 0.0);
  auto at = [&](int a, int b, int c) -> double& {
    return d[static_cast<size_t>(a * n + b) * n + c];
  };
  double scale = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        double t = 0.0;
        for (int j = 0; j < n; ++j) t -= r(a, j) * rm.alg.c(j, c, b);
        for (int i = 0; i < n; ++i) t -= r(i, b) * rm.alg.c(i, c, a);
        at(a, b, c) = t;
        scale = std::max(scale, std::abs(t));
      }
    }
  }
  // Antisymmetry in (a, b) holds exactly when the symmetric part of r is
  // invariant; reject otherwise instead of silently folding.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (std::abs(at(a, b, c) + at(b, a, c)) >
            1e-12 * std::max(scale, 1.0)) {
          throw PreconditionError(
              "dual bracket is not antisymmetric (symmetric part of r is "
              "not invariant)");
        }
      }
    }
  }
  std::vector<StructEntry> entries;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (at(a, b, c) != 0.0) {
          entries.push_back(StructEntry{a, b, c, at(a, b, c)});
        }
      }
    }
  }
  return LieAlgebra(rm.alg.name() + "_dual", n, entries);
}

double rpm_hom_residual(const RMatrix& rm) {
  const int n = rm.alg.dim();
  const LieAlgebra dual = dual_algebra(rm);
  const Mat rp = r_plus(rm), rn = r_minus(rm);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vec xa = unit_vec(n, a), xb = unit_vec(n, b);
      const Vec d = dual.bracket(xa, xb);
      worst = std::max(
          worst,
          max_abs(Vec(rp * d - rm.alg.bracket(Vec(rp * xa), Vec(rp * xb)))));
      worst = std::max(
          worst,
          max_abs(Vec(rn * d - rm.alg.bracket(Vec(rn * xa), Vec(rn * xb)))));
    }
  }
  return worst;
}

double ihat_graph_residual(const RMatrix& rm) {
  const int n = rm.alg.dim();
  const LieAlgebra dual = dual_algebra(rm);
  const Mat rn = r_minus(rm), I = big_I(rm);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vec xa = unit_vec(n, a), xb = unit_vec(n, b);
      const Vec d = dual.bracket(xa, xb);
      const Vec bu = rn * xa, bv = rn * xb;  // graph first components
      const Vec u = I * xa, v = I * xb;      // graph second components
      const Vec z = rm.alg.bracket(bu, v) + rm.alg.bracket(u, bv) +
                    rm.alg.bracket(u, v);
      worst = std::max(worst, max_abs(Vec(rn * d - rm.alg.bracket(bu, bv))));
      worst = std::max(worst, max_abs(Vec(I * d - z)));
    }
  }
  return worst;
}

Mat derived_rb_operator(const RMatrix& rm) {
  const Mat I = big_I(rm);
  if (is_singular(I, 1e-8)) {
    throw SingularError("derived operator needs invertible R + R^T");
  }
  // B = -R I^{-1}; I is symmetric, so B^T solves I X = -R^T.
  return I.partialPivLu().solve(Mat(-rm.r.transpose())).transpose();
}

namespace {

Mat poisson_at(const MatrixModel& model, const Mat& a_part, const Mat& g) {
  const int n2 = model.n * model.n;
  Mat pi = Mat::Zero(n2, n2);
  for (int i = 0; i < model.dim; ++i) {
    for (int j = 0; j < model.dim; ++j) {
      const double coef = a_part(i, j);
      if (coef == 0.0) continue;
      pi += coef * (vec_of(Mat(g * model.basis[i])) *
                        vec_of(Mat(g * model.basis[j])).transpose() -
                    vec_of(Mat(model.basis[i] * g)) *
                        vec_of(Mat(model.basis[j] * g)).transpose());
    }
  }
  return pi;
}

}  // namespace

double poisson_multiplicativity_residual(const MatrixModel& model,
                                         const RMatrix& rm, Rng& rng,
                                         int pairs) {
  if (rm.alg.dim() != model.dim) {
    throw DimensionError("poisson: model/algebra dimension mismatch");
  }
  const Mat a_part = antisymmetric_part(rm);
  const Mat id_n = Mat::Identity(model.n, model.n);
  double worst = 0.0;
  for (int s = 0; s < pairs; ++s) {
    const Mat g = model_exp(model, rng.vec(model.dim, -1.0, 1.0));
    const Mat h = model_exp(model, rng.vec(model.dim, -1.0, 1.0));
    const Mat kl = kron(id_n, g);             // vec(g U) = kl vec(U)
    const Mat kr = kron(h.transpose(), id_n);  // vec(U h) = kr vec(U)
    const Mat lhs = poisson_at(model, a_part, Mat(g * h));
    const Mat rhs = kl * poisson_at(model, a_part, h) * kl.transpose() +
                    kr * poisson_at(model, a_part, g) * kr.transpose();
    worst = std::max(worst, max_abs(Mat(lhs - rhs)));
  }
  return worst;
}

double poisson_identity_residual(const MatrixModel& model, const RMatrix& rm) {
  return max_abs(
      poisson_at(model, antisymmetric_part(rm), Mat::Identity(model.n, model.n)));
}

Mat poisson_bivector(const MatrixModel& model, const RMatrix& rm,
                     const Mat& g) {
  if (rm.alg.dim() != model.dim) {
    throw DimensionError("poisson: model/algebra dimension mismatch");
  }
  return poisson_at(model, antisymmetric_part(rm), g);
}

}  // namespace rbv
