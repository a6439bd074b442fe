#include "doctest.h"

#include <cmath>
#include <utility>

#include "core/factorization.hpp"
#include "core/rng.hpp"
#include "core/rota_baxter.hpp"

using namespace rbv;

namespace {

Mat series_exp(const Mat& x) {
  Mat sum = Mat::Identity(x.rows(), x.cols());
  Mat term = sum;
  for (int k = 1; k <= 30; ++k) {
    term = Mat(term * x / static_cast<double>(k));
    sum += term;
  }
  return sum;
}

const MatrixModel& model_by_index(int i) {
  switch (i) {
    case 0: return model_ut2();
    case 1: return model_heis3();
    case 2: return model_sl2();
    default: return model_diag2();
  }
}

Mat c11_integer_operator() {
  Mat b(2, 2);
  b << 2.0, 0.0, 3.0, 0.0;
  return b;
}

Mat heis_operator() {
  Mat b = Mat::Zero(3, 3);
  b(2, 1) = 1.0;
  return b;
}

}  // namespace

TEST_CASE("model exponentials match the series and invert exactly") {
  Rng rng(41);
  for (int i = 0; i < 4; ++i) {
    const MatrixModel& m = model_by_index(i);
    CAPTURE(m.name);
    for (int s = 0; s < 100; ++s) {
      const Vec x = rng.vec(m.dim, -1.0, 1.0);
      const Mat closed = model_exp(m, x);
      CHECK(max_abs(Mat(closed - series_exp(coords_to_matrix(m, x)))) <=
            1e-12);
      CHECK(max_abs(Vec(model_log(m, closed) - x)) <= 1e-12);
    }
  }
}

TEST_CASE("frozen traceless exponentials cover all three branches") {
  const MatrixModel& sl2 = model_sl2();
  Vec x(3);

  // Hyperbolic branch: exp(h) = diag(e, 1/e).
  x << 1.0, 0.0, 0.0;
  Mat g = model_exp(sl2, x);
  CHECK(g(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(g(1, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(g(0, 1) == 0.0);

  // Elliptic branch: exp(e - f) is a rotation by one radian.
  x << 0.0, 1.0, -1.0;
  g = model_exp(sl2, x);
  CHECK(g(0, 0) == doctest::Approx(std::cos(1.0)).epsilon(1e-15));
  CHECK(g(0, 1) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(g(1, 0) == doctest::Approx(-std::sin(1.0)).epsilon(1e-15));

  // Nilpotent branch: exp(e) = I + E12 exactly.
  x << 0.0, 1.0, 0.0;
  g = model_exp(sl2, x);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == 1.0);
  CHECK(g(1, 0) == 0.0);
  CHECK(g(1, 1) == 1.0);

  // Near the branch seam the round trip stays accurate.
  x << 1e-9, 1.0, 1.0;
  CHECK(max_abs(Vec(model_log(sl2, model_exp(sl2, x)) - x)) <= 1e-9);

  // Determinant-one with trace <= -2 is off the principal branch.
  Mat bad(2, 2);
  bad << -2.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(model_log(sl2, bad), DomainError);
  bad << 2.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(model_log(sl2, bad), DomainError);
}

TEST_CASE("models are consistent with their abstract algebras") {
  Rng rng(42);
  CHECK(model_consistency_residual(model_ut2(), nonabelian_2d(), rng, 50) <=
        1e-10);
  CHECK(model_consistency_residual(model_heis3(), heisenberg_3d(), rng, 50) <=
        1e-10);
  CHECK(model_consistency_residual(model_sl2(), sl2(), rng, 50) <=
        1e-10);
  CHECK_THROWS_AS(
      model_consistency_residual(model_sl2(), nonabelian_2d(), rng, 5),
      DimensionError);
}

TEST_CASE("letterwise factor maps are homomorphisms exactly for solutions") {
  CHECK(fpm_hom_residual(nonabelian_2d(), c11_integer_operator()) == 0.0);
  CHECK(fpm_hom_residual(heisenberg_3d(), heis_operator()) == 0.0);
  Mat f3(2, 2);
  f3 << -2.0, 2.0, -1.0, 1.0;
  CHECK(fpm_hom_residual(nonabelian_2d(), f3) == 0.0);
  CHECK(fpm_hom_residual(nonabelian_2d(), Mat::Identity(2, 2)) >= 1.0);
}

TEST_CASE("the two routes to J agree") {
  Rng rng(43);
  const FactorizationData fds[] = {
      {&model_ut2(), c11_integer_operator()},
      {&model_heis3(), heis_operator()},
  };
  for (const FactorizationData& fd : fds) {
    CAPTURE(fd.model->name);
    for (int i = 0; i < 50; ++i) {
      const WordLetters w = random_word(fd, rng, 1 + int(rng.below(4)));
      const auto [fminus, j] = word_semidirect(fd, w);
      CHECK(max_abs(Mat(fminus - word_Fminus(fd, w))) <= 1e-13);
      CHECK(max_abs(Mat(j - word_J(fd, w))) <= 1e-12);
      CHECK(max_abs(Mat(word_Fplus(fd, w) -
                        Mat(word_J(fd, w) * word_Fminus(fd, w)))) <= 1e-12);
    }
    CHECK(j_graph_residual(fd, rng, 50, 3) <= 1e-10);
    CHECK(j_tangent_residual(fd) <= 1e-6);
  }

  // Manual two-letter composition of the semidirect fold.
  const FactorizationData fd{&model_ut2(), c11_integer_operator()};
  const WordLetters w = random_word(fd, rng, 2);
  const auto [f2, j2] = word_semidirect(fd, w);
  const Mat g1 = model_exp(*fd.model, Vec(fd.B * w[0]));
  const Mat g2 = model_exp(*fd.model, Vec(fd.B * w[1]));
  const Mat k1 = Mat(model_exp(*fd.model, Vec((fd.B * w[0] + w[0]))) *
                     g1.inverse());
  const Mat k2 = Mat(model_exp(*fd.model, Vec((fd.B * w[1] + w[1]))) *
                     g2.inverse());
  CHECK(max_abs(Mat(f2 - Mat(g1 * g2))) <= 1e-13);
  CHECK(max_abs(Mat(j2 - Mat(k1 * g1 * k2 * g1.inverse()))) <= 1e-12);
}

TEST_CASE("the word search inverts J") {
  Rng rng(44);
  const FactorizationData fd{&model_ut2(), c11_integer_operator()};

  // A target that is exactly a J value is recovered to optimizer precision.
  const WordLetters w0 = random_word(fd, rng, 2);
  const Mat target = word_J(fd, w0);
  ProbeOutcome out = j_inverse_probe(fd, target, 2, 40000, rng, 1e-10);
  CHECK(out.residual <= 1e-8);
  CHECK(out.evals <= 40000);

  // Random nearby group elements are reachable too.
  for (int i = 0; i < 5; ++i) {
    const Mat t = model_exp(*fd.model, rng.vec(fd.model->dim, -0.3, 0.3));
    out = j_inverse_probe(fd, t, 2, 40000, rng, 2.5e-7);
    CHECK(out.residual <= 1e-6);
  }
}

TEST_CASE("the coordinate-group word map matches the paired fold") {
  Rng rng(45);
  const CatalogParams p;
  for (CatalogCase c : {CatalogCase::C11, CatalogCase::HEIS}) {
    CAPTURE(case_id(c));
    const GroupId gid = case_group(c);
    const Mat b = case_operator(c, p);
    for (int i = 0; i < 30; ++i) {
      const GWord w = random_gword(c, rng, 1 + int(rng.below(3)));
      const SemiElement x = xi2(c, p, w);
      // Through (g, h) -> (h g, g): components fold letterwise.
      GroupElement plus = gidentity(gid);
      GroupElement minus = gidentity(gid);
      for (const Vec& u : w.letters) {
        plus = gmul(plus, gexp(gid, Vec(b * u + u)));
        minus = gmul(minus, gexp(gid, Vec(b * u)));
      }
      CHECK(gdist(gmul(x.h, x.g), plus) <= 1e-12);
      CHECK(gdist(x.g, minus) <= 1e-12);
    }
  }
}

TEST_CASE("single letters are solvable for prescribed targets") {
  Rng rng(46);
  const CatalogParams p;
  for (CatalogCase c : integrable_cases()) {
    CAPTURE(case_id(c));
    const GroupId gid = case_group(c);
    for (int i = 0; i < 20; ++i) {
      const GroupElement k = random_element(gid, rng);
      const Vec u = letter_for_target(c, p, k);
      GWord w;
      w.letters.push_back(u);
      CHECK(gdist(xi2(c, p, w).h, k) <= 1e-10);
    }
  }
  // On the Heisenberg case the letter is exactly the logarithm.
  const GroupElement k = random_element(GroupId::HEIS3, rng);
  CHECK(max_abs(Vec(letter_for_target(CatalogCase::HEIS, p, k) - glog(k))) ==
        0.0);
}

TEST_CASE("upsilon splits off the plain factor exactly") {
  Rng rng(47);
  const CatalogParams p;
  for (CatalogCase c : integrable_cases()) {
    CAPTURE(case_id(c));
    const GroupId gid = case_group(c);
    const GroupElement g = random_element(gid, rng);
    const GWord w = random_gword(c, rng, 2);

    // Upsilon of (g, empty word) is exactly (g, e).
    const SemiElement only_g = upsilon(c, p, g, GWord{});
    CHECK(gdist(only_g.g, g) == 0.0);
    CHECK(gdist(only_g.h, gidentity(gid)) == 0.0);

    // Upsilon of (e, w) is exactly Xi2(w).
    const SemiElement only_w = upsilon(c, p, gidentity(gid), w);
    CHECK(sdist(only_w, xi2(c, p, w)) == 0.0);

    // Inversion recovers a (g, word) pair with the same Upsilon value.
    const SemiElement target{random_element(gid, rng),
                             random_element(gid, rng)};
    const UpsilonFactorization f = upsilon_invert(c, p, target);
    CHECK(f.residual <= 1e-10);
    CHECK(sdist(upsilon(c, p, f.g, f.word), target) <= 1e-10);
  }
  CHECK_THROWS_AS(upsilon_invert(CatalogCase::C3, p, sidentity(GroupId::UT2)),
                  PreconditionError);
}

TEST_CASE("commuting squares close on prescribed sides") {
  Rng rng(48);
  const CatalogParams p;
  for (CatalogCase c : {CatalogCase::C11, CatalogCase::HEIS}) {
    CAPTURE(case_id(c));
    const GroupId gid = case_group(c);
    for (int i = 0; i < 20; ++i) {
      const GroupElement a = random_element(gid, rng);
      const GWord w = random_gword(c, rng, 2);
      const auto same_word = [](const GWord& x, const GWord& y) {
        if (x.letters.size() != y.letters.size()) return false;
        for (size_t j = 0; j < x.letters.size(); ++j) {
          if (max_abs(Vec(x.letters[j] - y.letters[j])) != 0.0) return false;
        }
        return true;
      };
      const GammaSquare s1 = square_from_a2_h1(c, p, a, w);
      CHECK(gdist(s1.a2, a) == 0.0);
      CHECK(same_word(s1.h1, w));
      CHECK(gamma_invariant_residual(c, p, s1) <= 1e-10);
      const GammaSquare s2 = square_from_h2_a1(c, p, w, a);
      CHECK(gdist(s2.a1, a) == 0.0);
      CHECK(same_word(s2.h2, w));
      CHECK(gamma_invariant_residual(c, p, s2) <= 1e-10);
      const GammaSquare s3 = square_from_h2_a2(c, p, w, a);
      CHECK(gdist(s3.a2, a) == 0.0);
      CHECK(same_word(s3.h2, w));
      CHECK(gamma_invariant_residual(c, p, s3) <= 1e-10);
    }
  }
}

TEST_CASE("square composition obeys the interchange law") {
  Rng rng(49);
  const CatalogParams p;
  for (CatalogCase c : {CatalogCase::C11, CatalogCase::HEIS}) {
    CAPTURE(case_id(c));
    for (int i = 0; i < 25; ++i) {
      CHECK(gamma_interchange_residual(c, p, rng) <= 1e-9);
    }
  }

  // Compositions with mismatched shared sides are rejected.
  const CatalogCase c = CatalogCase::C11;
  const GroupElement a = random_element(GroupId::UT2, rng);
  const GWord w1 = random_gword(c, rng, 2);
  const GWord w2 = random_gword(c, rng, 2);
  const GammaSquare x = square_from_a2_h1(c, p, a, w1);
  const GammaSquare y = square_from_a2_h1(c, p, a, w2);
  CHECK_THROWS_AS(gamma_mul_h(c, x, y), PreconditionError);
  CHECK_THROWS_AS(gamma_mul_v(c, x, y), PreconditionError);
}
