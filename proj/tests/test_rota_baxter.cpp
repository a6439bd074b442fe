#include "doctest.h"

#include "core/rng.hpp"
#include "core/rota_baxter.hpp"

using namespace rbv;

namespace {

Mat mat2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("the scalar reduction equals the general residual") {
  Rng rng(123);
  for (int i = 0; i < 500; ++i) {
    const Mat b = rng.mat(2, 2, -3.0, 3.0);
    double e1 = 0.0, e2 = 0.0;
    const double scalar = rb_scalar_equations_2d(b, e1, e2);
    CHECK(std::abs(scalar - rb_residual(rb_data_2d_adjoint(b))) <= 1e-13);
    CHECK(scalar == 2.0 * std::max(std::abs(e1), std::abs(e2)));
  }
}

TEST_CASE("family representatives with integer parameters are exact zeros") {
  CHECK(rb_residual(rb_data_2d_adjoint(mat2(2, 0, 3, 0))) == 0.0);
  CHECK(rb_residual(rb_data_2d_adjoint(mat2(1, 0, 5, -1))) == 0.0);
  CHECK(rb_residual(rb_data_2d_adjoint(mat2(-2, 2, -1, 1))) == 0.0);
  // The identity operator misses the identity by exactly 4.
  CHECK(rb_residual(rb_data_2d_adjoint(Mat::Identity(2, 2))) == 4.0);
}

TEST_CASE("families pass at random parameters") {
  Rng rng(7);
  for (Family2D f :
       {Family2D::Family1, Family2D::Family2, Family2D::Family3}) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double p1 = rng.uniform(-5.0, 5.0);
      const double p2 = f == Family2D::Family3
                            ? (rng.uniform01() < 0.5 ? -1.0 : 1.0) *
                                  rng.uniform(0.1, 5.0)
                            : rng.uniform(-5.0, 5.0);
      worst = std::max(
          worst, rb_residual(rb_data_2d_adjoint(family_operator_2d(f, p1, p2))));
    }
    CAPTURE(family_name(f));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("classification recovers the family and its parameters") {
  Classification2D cl = classify_rb_2d(mat2(3, 0, 5, 0), 1e-9);
  CHECK(cl.family == Family2D::Family1);
  CHECK(cl.p1 == 3.0);
  CHECK(cl.p2 == 5.0);

  cl = classify_rb_2d(mat2(2.5, 0, -4, -1), 1e-9);
  CHECK(cl.family == Family2D::Family2);
  CHECK(cl.p1 == 2.5);
  CHECK(cl.p2 == -4.0);

  cl = classify_rb_2d(mat2(-2, 2, -1, 1), 1e-9);
  CHECK(cl.family == Family2D::Family3);
  CHECK(cl.p1 == 1.0);
  CHECK(cl.p2 == 2.0);
  CHECK(max_abs(Mat(family_operator_2d(cl.family, cl.p1, cl.p2) -
                    mat2(-2, 2, -1, 1))) == 0.0);

  CHECK(classify_rb_2d(Mat::Identity(2, 2), 1e-9).family == Family2D::NotRB);
  // b12 above tolerance but trace/determinant far from the third family.
  CHECK(classify_rb_2d(mat2(0, 2e-9, 0, 0), 1e-9).family == Family2D::NotRB);
  CHECK(classify_rb_2d(mat2(0, 0.5e-9, 0, 0), 1e-9).family ==
        Family2D::Family1);

  // The tolerance is honored.
  const Mat nudged = mat2(3, 1e-6, 5, 0);
  CHECK(classify_rb_2d(nudged, 1e-9).family == Family2D::NotRB);
  CHECK(classify_rb_2d(nudged, 1e-5).family == Family2D::Family1);

  CHECK(std::string(family_name(Family2D::Family1)) == "family1");
  CHECK(std::string(family_name(Family2D::NotRB)) == "not-rb");
  CHECK_THROWS_AS(family_operator_2d(Family2D::Family3, 1.0, 0.0),
                  DomainError);
}

TEST_CASE("graph closure measures exactly the identity defect") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Mat b = rng.mat(2, 2, -2.0, 2.0);
    const RelativeRBData data = rb_data_2d_adjoint(b);
    CHECK(std::abs(graph_subalgebra(data).closure_residual -
                   rb_residual(data)) <= 1e-12);
  }
  // Frozen induced bracket for B = [[2,0],[3,0]]:
  // [w1, w2] = [B e1, e2] + [e1, B e2] + [e1, e2] = 6 e2.
  const GraphResult gr = graph_subalgebra(rb_data_2d_adjoint(mat2(2, 0, 3, 0)));
  CHECK(gr.closure_residual == 0.0);
  CHECK(gr.induced.c(0, 1, 1) == 6.0);
  CHECK(gr.induced.c(0, 1, 0) == 0.0);
  // B = 0 reproduces the original table.
  CHECK(graph_subalgebra(rb_data_2d_adjoint(Mat::Zero(2, 2)))
            .induced.c(0, 1, 1) == 2.0);
}

TEST_CASE("matched pair induced by an integer operator has frozen actions") {
  const RelativeRBData data = rb_data_2d_adjoint(mat2(2, 0, 3, 0));
  const MatchedPair mp = matched_pair_from_rb(data);

  CHECK(mp.rho[0](0, 0) == 0.0);
  CHECK(mp.rho[0](1, 1) == 2.0);
  CHECK(mp.rho[0](0, 1) == 0.0);
  CHECK(mp.rho[1](1, 0) == -2.0);
  CHECK(mp.rho[1](0, 0) == 0.0);

  // mu(w1) x = B[x, e1] + [B e1, x]:  e1 -> -6 e2,  e2 -> 4 e2.
  CHECK(mp.mu[0](0, 0) == 0.0);
  CHECK(mp.mu[0](1, 0) == -6.0);
  CHECK(mp.mu[0](0, 1) == 0.0);
  CHECK(mp.mu[0](1, 1) == 4.0);
  CHECK(max_abs(mp.mu[1]) == 0.0);

  CHECK(matched_pair_residual(mp) == 0.0);
  CHECK(matched_pair_representation_residual(mp) == 0.0);

  const LieAlgebra dbl = double_bracket(mp);
  CHECK(dbl.dim() == 4);
  CHECK(dbl.jacobi_residual() == 0.0);
}

TEST_CASE("matched pair checks reject non-solutions") {
  CHECK_THROWS_AS(matched_pair_from_rb(rb_data_2d_adjoint(Mat::Identity(2, 2))),
                  PreconditionError);

  // Both actions adjoint is not a matched pair for this algebra.
  const LieAlgebra a2 = nonabelian_2d();
  const std::vector<Mat> ad = {a2.ad(unit_vec(2, 0)), a2.ad(unit_vec(2, 1))};
  const MatchedPair bogus{a2, a2, ad, ad};
  CHECK(matched_pair_residual(bogus) == 4.0);

  // A single perturbed entry of mu is visible at first order: the defect
  // picks up [delta e1, e2] = 2 delta e2 with nothing to cancel it.
  MatchedPair mp = matched_pair_from_rb(rb_data_2d_adjoint(mat2(2, 0, 3, 0)));
  mp.mu[0](0, 0) += 0.1;
  CHECK(std::abs(matched_pair_residual(mp) - 0.2) <= 1e-14);

  // Zero actions always match and give the direct sum.
  const std::vector<Mat> zero = {Mat::Zero(2, 2), Mat::Zero(2, 2)};
  const MatchedPair direct{a2, a2, zero, zero};
  CHECK(matched_pair_residual(direct) == 0.0);
  CHECK(double_bracket(direct).jacobi_residual() == 0.0);
}

TEST_CASE("the comparison map is a homomorphism exactly for solutions") {
  CHECK(kappa_residual(rb_data_2d_adjoint(mat2(2, 0, 3, 0))) == 0.0);

  Mat heis_b = Mat::Zero(3, 3);
  heis_b(2, 1) = 1.0;
  const RelativeRBData heis_data{adjoint_action(heisenberg_3d()), heis_b};
  CHECK(kappa_residual(heis_data) == 0.0);

  Mat off = mat2(2, 1e-3, 3, 0);
  CHECK(kappa_residual(rb_data_2d_adjoint(off), 1e9) >= 1e-4);
  CHECK_THROWS_AS(kappa_residual(rb_data_2d_adjoint(Mat::Identity(2, 2))),
                  PreconditionError);
}
