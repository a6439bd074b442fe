#include "doctest.h"

#include <cmath>

#include "core/group_catalog.hpp"
#include "core/optimize.hpp"
#include "core/rng.hpp"
#include "core/rota_baxter.hpp"

using namespace rbv;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

GroupElement ut2(double a, double b) {
  return gmake(GroupId::UT2, v2(a, b));
}

}  // namespace

TEST_CASE("case ids round-trip and bad ids are rejected") {
  for (CatalogCase c : all_cases()) {
    CHECK(parse_case(case_id(c)) == c);
  }
  CHECK(all_cases().size() == 8);
  CHECK(integrable_cases().size() == 7);
  CHECK_THROWS_AS(parse_case("4.2"), ArgumentError);
  CHECK_THROWS_AS(parse_case(""), ArgumentError);
}

TEST_CASE("parameter validation guards the excluded values") {
  CatalogParams p;
  p.lambda = 0.0;
  CHECK_THROWS_AS(validate_params(CatalogCase::C11, p), DomainError);
  p.lambda = -1.0;
  CHECK_THROWS_AS(validate_params(CatalogCase::C23, p), DomainError);
  p.lambda = 2.0;
  CHECK_NOTHROW(validate_params(CatalogCase::C11, p));
  // The same value is fine for cases that do not read lambda.
  p.lambda = 0.0;
  CHECK_NOTHROW(validate_params(CatalogCase::C12, p));
  p.k = 0.0;
  CHECK_THROWS_AS(validate_params(CatalogCase::C3, p), DomainError);
}

TEST_CASE("frozen operator matrices at the default parameters") {
  CatalogParams p;  // lambda 2, mu 3, m (per case below), k 2
  p.m = 1.0;
  p.k = 2.0;
  const auto entry = [&](CatalogCase c, int i, int j) {
    return case_operator(c, p)(i, j);
  };
  CHECK(entry(CatalogCase::C11, 0, 0) == 2.0);
  CHECK(entry(CatalogCase::C11, 1, 0) == 3.0);
  CHECK(entry(CatalogCase::C11, 1, 1) == 0.0);
  CHECK(entry(CatalogCase::C12, 0, 0) == -1.0);
  CHECK(entry(CatalogCase::C13, 0, 0) == 0.0);
  CHECK(entry(CatalogCase::C13, 1, 0) == 3.0);
  CHECK(entry(CatalogCase::C21, 0, 0) == 0.0);
  CHECK(entry(CatalogCase::C21, 1, 1) == -1.0);
  CHECK(entry(CatalogCase::C22, 0, 0) == -1.0);
  CHECK(entry(CatalogCase::C22, 1, 1) == -1.0);
  CHECK(entry(CatalogCase::C23, 0, 0) == 2.0);
  CHECK(entry(CatalogCase::C23, 1, 1) == -1.0);

  const Mat bh = case_operator(CatalogCase::HEIS, p);
  CHECK(bh.rows() == 3);
  CHECK(bh(2, 1) == 1.0);
  CHECK(max_abs(bh) == 1.0);

  const Mat b3 = case_operator(CatalogCase::C3, p);
  CHECK(b3(0, 0) == -2.0);
  CHECK(b3(0, 1) == 2.0);
  CHECK(b3(1, 0) == -1.0);
  CHECK(b3(1, 1) == 1.0);

  // Every catalog operator solves the algebra-level identity exactly.
  for (CatalogCase c : all_cases()) {
    const Mat b = case_operator(c, p);
    const LieAlgebra& alg = group_algebra(case_group(c));
    CHECK(rb_residual(RelativeRBData{adjoint_action(alg), b}) == 0.0);
  }
}

TEST_CASE("frozen group operator values at the default parameters") {
  const CatalogParams p;  // lambda 2, mu 3
  const auto bmap = [&](CatalogCase c, double a, double b) {
    return case_rb_map(c, p, ut2(a, b));
  };
  GroupElement g = bmap(CatalogCase::C11, 2.0, 5.0);
  CHECK(g.c(0) == 4.0);
  CHECK(g.c(1) == 2.8125);

  g = bmap(CatalogCase::C12, 2.0, -1.0);
  CHECK(g.c(0) == 0.5);
  CHECK(g.c(1) == 2.25);

  g = bmap(CatalogCase::C13, 2.0, 7.0);
  CHECK(g.c(0) == 1.0);
  CHECK(g.c(1) == 3.0 * std::log(2.0));

  g = bmap(CatalogCase::C21, 2.0, 4.0);
  CHECK(g.c(0) == 1.0);
  CHECK(g.c(1) == -0.875);

  g = bmap(CatalogCase::C22, 2.0, 1.0);
  CHECK(g.c(0) == 0.5);
  CHECK(g.c(1) == doctest::Approx(-1.0 + 1.5 * std::log(2.0)).epsilon(1e-15));

  g = bmap(CatalogCase::C23, 2.0, 8.0);
  CHECK(g.c(0) == 4.0);
  CHECK(g.c(1) == 0.96875);

  Vec h(3);
  h << 1.0, 2.0, 3.0;
  g = case_rb_map(CatalogCase::HEIS, p, gmake(GroupId::HEIS3, h));
  CHECK(g.c(0) == 0.0);
  CHECK(g.c(1) == 3.0);
  CHECK(g.c(2) == 0.0);

  CHECK_THROWS_AS(case_rb_map(CatalogCase::C3, p, ut2(2.0, 1.0)),
                  PreconditionError);
}

TEST_CASE("the group identity holds across random parameters") {
  Rng rng(31);
  for (CatalogCase c : integrable_cases()) {
    double worst = group_rb_residual(c, CatalogParams{}, rng, 100);
    const int draws = c == CatalogCase::HEIS ? 0 : 10;
    for (int d = 0; d < draws; ++d) {
      const CatalogParams p = random_params(c, rng);
      worst = std::max(worst, group_rb_residual(c, p, rng, 100));
    }
    CAPTURE(case_id(c));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("a wrong group map fails the identity by a wide margin") {
  // Squaring the diagonal coordinate is a homomorphism H -> G but not a
  // solution of the twisted identity.
  const auto wrong = [](const GroupElement& h) {
    return ut2(h.c(0) * h.c(0), h.c(1));
  };
  const GroupElement h1 = ut2(2.0, 1.0);
  const GroupElement h2 = ut2(3.0, 1.0);
  const GroupElement lhs = gmul(wrong(h1), wrong(h2));
  const GroupElement rhs = wrong(gmul(h1, gconj(wrong(h1), h2)));
  CHECK(gdist(lhs, rhs) >= 0.1);
}

TEST_CASE("the derivative of the group operator is the algebra operator") {
  for (CatalogCase c : integrable_cases()) {
    CAPTURE(case_id(c));
    CHECK(tangent_matches_algebra(c, CatalogParams{}) <= 1e-6);
  }
  CatalogParams p;
  p.lambda = -2.5;
  p.mu = 0.7;
  CHECK(tangent_matches_algebra(CatalogCase::C11, p) <= 1e-6);
}

TEST_CASE("the subgroup chart sits over the group operator and closes") {
  Rng rng(32);
  const CatalogParams p;
  for (CatalogCase c : integrable_cases()) {
    CAPTURE(case_id(c));
    CHECK(d_chart_base_residual(c, p, rng, 100) <= 1e-9);
    CHECK(d_chart_closure_residual(c, p, rng, 100) <= 1e-9);
    // The identity-chart point is the group identity.
    Vec t0 = Vec::Zero(d_chart_dim(c));
    if (case_group(c) == GroupId::UT2) t0(0) = 1.0;
    CHECK(sdist(d_chart(c, p, t0), sidentity(case_group(c))) == 0.0);
  }
  CatalogParams p3;
  p3.m = 1.0;
  p3.k = 2.0;
  CHECK(d_chart_closure_residual(CatalogCase::C3, p3, rng, 100) <= 1e-9);
  CHECK(sdist(d_chart(CatalogCase::C3, p3, v2(1.0, 1.0)),
              sidentity(GroupId::UT2)) == 0.0);
}

TEST_CASE("the long-form case-3 chart coordinate equals the short form") {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    CatalogParams p;
    p.m = rng.uniform(-2.0, 2.0);
    p.k = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.0);
    const double a = std::exp(rng.uniform(-1.0, 1.0));
    const double b = std::exp(rng.uniform(-1.0, 1.0));
    const SemiElement d = d_chart(CatalogCase::C3, p, v2(a, b));
    const double expect =
        ((a * a + p.m) * b - (p.m + 1.0) / b) / (2.0 * p.k);
    const double scale = std::max(1.0, std::abs(expect));
    CHECK(std::abs(d.h.c(1) - expect) <= 1e-12 * scale);
    CHECK(d.h.c(0) == b);
    // g-part of the chart.
    CHECK(std::abs(d.g.c(1) -
                   p.m / (2.0 * p.k) * (a - 1.0 / a)) <= 1e-13);
  }
}

TEST_CASE("chart tangents recover the operator graph with full rank") {
  const CatalogParams p;
  for (CatalogCase c : all_cases()) {
    CAPTURE(case_id(c));
    const ChartTangent ct = d_chart_tangent(c, p);
    CHECK(ct.graph_residual <= 1e-6);
    CHECK(ct.span_sigma_min >= 1e-3);
  }
}

TEST_CASE("membership factorization is exact in the subgroup coordinates") {
  Rng rng(34);
  const CatalogParams p;
  for (CatalogCase c : integrable_cases()) {
    CAPTURE(case_id(c));
    const GroupId gid = case_group(c);
    for (int i = 0; i < 20; ++i) {
      const SemiElement target{random_element(gid, rng),
                               random_element(gid, rng)};
      const MembershipFactorization f = membership_factor(c, p, target);
      // The subgroup factor carries exactly the h-part of the target.
      CHECK(gdist(f.d.h, target.h) == 0.0);
      CHECK(gdist(f.d.g, case_rb_map(c, p, target.h)) == 0.0);
      // Recombination returns the target.
      const SemiElement back =
          smul(f.d, SemiElement{f.remainder, gidentity(gid)});
      CHECK(sdist(back, target) <= 1e-12);
      CHECK(f.residual <= 1e-12);
    }
    CHECK(membership_residual(c, p, rng, 50) <= 1e-12);
  }
  CHECK_THROWS_AS(
      membership_factor(CatalogCase::C3, p,
                        sidentity(GroupId::UT2)),
      PreconditionError);
}

TEST_CASE("excluded case-3 targets resist the search probe") {
  Rng rng(35);
  for (double z : {0.5, 1.0, 2.0}) {
    const SemiElement target = case3_excluded_target(0.0, 1.0, z, rng);
    // Frozen h-part of the excluded locus.
    CHECK(target.h.c(0) == z);
    CHECK(target.h.c(1) == (-z - 1.0 / z) / 2.0);
    const ProbeOutcome out = obstruction_probe(0.0, 1.0, target, 30000, rng,
                                               0.045);
    CAPTURE(z);
    CHECK(out.residual >= 0.05);
    CHECK(out.evals <= 30000);
  }
  // A second parameter point in the family.
  const SemiElement t2 = case3_excluded_target(-1.0, -1.0, 1.0, rng);
  CHECK(obstruction_probe(-1.0, -1.0, t2, 30000, rng, 0.045).residual >=
        0.05);
  CHECK_THROWS_AS(case3_excluded_target(0.0, 1.0, -2.0, rng), DomainError);
  CHECK_THROWS_AS(case3_excluded_target(0.0, 0.0, 1.0, rng), DomainError);
}

TEST_CASE("in-image case-3 targets are found by the search probe") {
  Rng rng(36);
  for (int i = 0; i < 5; ++i) {
    const SemiElement target = case3_in_image_target(0.0, 1.0, rng);
    const ProbeOutcome out =
        obstruction_probe(0.0, 1.0, target, 100000, rng, 2.5e-7);
    CHECK(out.residual <= 1e-6);
    CHECK(out.evals <= 100000);
  }
}

TEST_CASE("the minimizer solves a smooth problem within budget") {
  const Objective f = [](const Vec& v) {
    const double dx = v(0) - 1.0;
    const double dy = v(1) + 2.0;
    return dx * dx + 2.0 * dy * dy;
  };
  const OptimizeResult out = minimize(f, {v2(5.0, 5.0)}, 4000, -1.0);
  CHECK(out.value <= 1e-10);
  CHECK(std::abs(out.argmin(0) - 1.0) <= 1e-4);
  CHECK(std::abs(out.argmin(1) + 2.0) <= 1e-4);
  CHECK(out.evals <= 4000);

  // stop_below short-circuits the search.
  const OptimizeResult early = minimize(f, {v2(5.0, 5.0)}, 4000, 1.0);
  CHECK(early.value <= 1.0);
  CHECK(early.evals < out.evals);
}
