#include "doctest.h"

#include <cmath>

#include "core/bialgebra.hpp"
#include "core/rng.hpp"
#include "core/rota_baxter.hpp"

using namespace rbv;

namespace {

/// Independent Yang-Baxter oracle through structure-constant contractions.
/// With C_m(a, b) = c(a, b, m), the coefficient of e_i (x) e_j (x) e_k in
/// [[r, r]] is (R^T C_i R)(j,k) + (R C_j R)(i,k) + (R C_k R^T)(i,j).
double cybe_oracle(const RMatrix& rm) {
  const int n = rm.alg.dim();
  std::vector<Mat> cm(n, Mat::Zero(n, n));
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cm[m](a, b) = rm.alg.c(a, b, m);
  std::vector<Mat> t1(n), t2(n), t3(n);
  for (int m = 0; m < n; ++m) {
    t1[m] = Mat(rm.r.transpose() * cm[m] * rm.r);
    t2[m] = Mat(rm.r * cm[m] * rm.r);
    t3[m] = Mat(rm.r * cm[m] * rm.r.transpose());
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst,
                         std::abs(t1[i](j, k) + t2[j](i, k) + t3[k](i, j)));
  return worst;
}

}  // namespace

TEST_CASE("the Yang-Baxter residual matches the contraction oracle") {
  Rng rng(51);
  for (const LieAlgebra& alg : {sl2(), heisenberg_3d()}) {
    for (int i = 0; i < 50; ++i) {
      const RMatrix rm = make_rmatrix(alg, rng.mat(3, 3, -2.0, 2.0));
      CHECK(std::abs(cybe_residual(rm) - cybe_oracle(rm)) <= 1e-13);
    }
  }
}

TEST_CASE("the standard r-matrix is an exact factorizable solution") {
  const RMatrix rm = sl2_standard_rmatrix();
  CHECK(rm.r(0, 0) == 0.25);
  CHECK(rm.r(1, 2) == 1.0);
  CHECK(rm.r(2, 1) == 0.0);

  CHECK(cybe_residual(rm) == 0.0);
  CHECK(invariance_residual(rm) == 0.0);
  CHECK(is_factorizable(rm));

  const Mat I = big_I(rm);
  CHECK(I(0, 0) == 0.5);
  CHECK(I(1, 2) == 1.0);
  CHECK(I(2, 1) == 1.0);
  CHECK(I(1, 1) == 0.0);
  CHECK(I.determinant() == doctest::Approx(-0.5).epsilon(1e-15));

  const Mat b = derived_rb_operator(rm);
  CHECK(b(0, 0) == -0.5);
  CHECK(b(1, 1) == -1.0);
  CHECK(b(2, 2) == 0.0);
  CHECK(std::abs(b(0, 1)) + std::abs(b(0, 2)) + std::abs(b(1, 0)) +
            std::abs(b(1, 2)) + std::abs(b(2, 0)) + std::abs(b(2, 1)) ==
        0.0);
  CHECK(rb_residual(RelativeRBData{adjoint_action(sl2()), b}) == 0.0);

  const LieAlgebra dual = dual_algebra(rm);
  CHECK(dual.jacobi_residual() == 0.0);
  CHECK(dual.c(0, 1, 1) == -0.5);
  CHECK(dual.c(0, 2, 2) == -0.5);
  CHECK(dual.c(1, 2, 0) == 0.0);

  CHECK(rpm_hom_residual(rm) == 0.0);
  CHECK(ihat_graph_residual(rm) == 0.0);
}

TEST_CASE("scaling a solution keeps every structural property") {
  const RMatrix rm = sl2_standard_rmatrix();
  for (double t : {2.0, 0.5, -1.0}) {
    const RMatrix scaled = make_rmatrix(rm.alg, Mat(t * rm.r));
    CHECK(cybe_residual(scaled) == 0.0);
    CHECK(invariance_residual(scaled) == 0.0);
    CHECK(is_factorizable(scaled));
    CHECK(dual_algebra(scaled).jacobi_residual() == 0.0);
    CHECK(rb_residual(RelativeRBData{adjoint_action(sl2()),
                                     derived_rb_operator(scaled)}) <= 1e-15);
  }
}

TEST_CASE("non-solutions are rejected where the theory requires it") {
  // A symmetric non-invariant tensor: the dual bracket is not antisymmetric.
  Mat r = Mat::Zero(3, 3);
  r(0, 0) = 1.0;
  const RMatrix bad = make_rmatrix(sl2(), r);
  CHECK(invariance_residual(bad) > 0.1);
  CHECK_THROWS_AS(dual_algebra(bad), PreconditionError);

  // Purely antisymmetric r has I = 0: no derived operator.
  Mat anti = Mat::Zero(3, 3);
  anti(1, 2) = 1.0;
  anti(2, 1) = -1.0;
  const RMatrix skew = make_rmatrix(sl2(), anti);
  CHECK(!is_factorizable(skew));
  CHECK_THROWS_AS(derived_rb_operator(skew), SingularError);

  CHECK_THROWS_AS(make_rmatrix(sl2(), Mat::Zero(2, 2)),
                  DimensionError);
}

TEST_CASE("the Poisson bivector is multiplicative for any antisymmetric r") {
  Rng rng(52);
  struct Entry {
    const MatrixModel* model;
    LieAlgebra alg;
  };
  const Entry entries[] = {
      {&model_ut2(), nonabelian_2d()},
      {&model_heis3(), heisenberg_3d()},
      {&model_sl2(), sl2()},
  };
  for (const Entry& e : entries) {
    CAPTURE(e.model->name);
    const int n = e.alg.dim();
    // Multiplicativity needs no Yang-Baxter equation, only antisymmetry.
    Mat a = rng.mat(n, n, -1.0, 1.0);
    a = Mat((a - Mat(a.transpose())) / 2.0);
    const RMatrix rm = make_rmatrix(e.alg, a);
    CHECK(poisson_identity_residual(*e.model, rm) == 0.0);
    CHECK(poisson_multiplicativity_residual(*e.model, rm, rng, 100) <= 1e-8);
    // The bivector is antisymmetric at every point.
    const Mat g = model_exp(*e.model, rng.vec(n, -0.5, 0.5));
    const Mat pi = poisson_bivector(*e.model, rm, g);
    CHECK(max_abs(Mat(pi + Mat(pi.transpose()))) <= 1e-13);
  }

  // The standard sl2 solution also passes with its full (non-skew) R.
  CHECK(poisson_multiplicativity_residual(model_sl2(), sl2_standard_rmatrix(),
                                          rng, 100) <= 1e-8);

  // On a commuting model every bivector vanishes identically.
  Mat a2 = Mat::Zero(2, 2);
  a2(0, 1) = 1.0;
  a2(1, 0) = -1.0;
  const RMatrix flat = make_rmatrix(abelian(2), a2);
  for (int i = 0; i < 10; ++i) {
    const Mat g = model_exp(model_diag2(), rng.vec(2, -1.0, 1.0));
    CHECK(max_abs(poisson_bivector(model_diag2(), flat, g)) == 0.0);
  }

  CHECK_THROWS_AS(
      poisson_bivector(model_sl2(), make_rmatrix(abelian(2), a2),
                       Mat::Identity(2, 2)),
      DimensionError);
}
