#include "factorization.hpp"

#include <cmath>

#include "errors.hpp"
#include "optimize.hpp"
#include "rota_baxter.hpp"

namespace rbv {
namespace {

// --- closed-form matrix exponentials / logarithms ---------------------------

/// exp of a traceless 2x2 matrix via X^2 = -det(X) I.
Mat traceless_exp(const Mat& x) {
  const double delta = -x.determinant();
  double ch, shc;  // exp = ch * I + shc * X
  if (delta > 1e-8) {
    const double t = std::sqrt(delta);
    ch = std::cosh(t);
    shc = std::sinh(t) / t;
  } else if (delta < -1e-8) {
    const double t = std::sqrt(-delta);
    ch = std::cos(t);
    shc = std::sin(t) / t;
  } else {
    ch = 1.0 + delta / 2.0 + delta * delta / 24.0;
    shc = 1.0 + delta / 6.0 + delta * delta / 120.0;
  }
  return ch * Mat::Identity(2, 2) + shc * x;
}

/// log of exp(traceless 2x2); defined for det = 1 and trace > -2.
Mat traceless_log(const Mat& g) {
  if (g.rows() != 2 || g.cols() != 2) {
    throw DimensionError("traceless_log expects a 2x2 matrix");
  }
  if (std::abs(g.determinant() - 1.0) > 1e-9) {
    throw DomainError("matrix log requires determinant 1");
  }
  const double c = 0.5 * (g(0, 0) + g(1, 1));
  double shc;  // g = c I + shc * X  with  X the sought logarithm
  if (c > 1.0 + 1e-8) {
    const double t = std::acosh(c);
    shc = std::sinh(t) / t;
  } else if (c < 1.0 - 1e-8) {
    if (c <= -1.0) {
      throw DomainError("matrix log branch point (trace <= -2)");
    }
    const double t = std::acos(c);
    shc = std::sin(t) / t;
  } else {
    const double u = c - 1.0;
    shc = 1.0 + u / 3.0 - 2.0 * u * u / 45.0;
  }
  return (g - c * Mat::Identity(2, 2)) / shc;
}

Mat nilpotent3_exp(const Mat& x) {
  return Mat::Identity(3, 3) + x + 0.5 * (x * x);
}

Mat nilpotent3_log(const Mat& g) {
  if (g.rows() != 3 || g.cols() != 3) {
    throw DimensionError("nilpotent3_log expects a 3x3 matrix");
  }
  const Mat n = g - Mat::Identity(3, 3);
  return n - 0.5 * (n * n);
}

Mat diag_exp(const Mat& x) {
  Mat g = Mat::Zero(2, 2);
  g(0, 0) = std::exp(x(0, 0));
  g(1, 1) = std::exp(x(1, 1));
  return g;
}

Mat diag_log(const Mat& g) {
  if (!(g(0, 0) > 0.0) || !(g(1, 1) > 0.0)) {
    throw DomainError("diagonal log requires positive diagonal entries");
  }
  Mat x = Mat::Zero(2, 2);
  x(0, 0) = std::log(g(0, 0));
  x(1, 1) = std::log(g(1, 1));
  return x;
}

Mat elem(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

const MatrixModel& model_ut2() {
  static const MatrixModel m = [] {
    MatrixModel mm;
    mm.name = "ut2";
    mm.n = 2;
    mm.dim = 2;
    Mat h(2, 2);
    h << 1, 0, 0, -1;
    mm.basis = {h, elem(2, 0, 1)};
    mm.exp_fn = traceless_exp;
    mm.log_fn = traceless_log;
    return mm;
  }();
  return m;
}

const MatrixModel& model_heis3() {
  static const MatrixModel m = [] {
    MatrixModel mm;
    mm.name = "heis3";
    mm.n = 3;
    mm.dim = 3;
    mm.basis = {elem(3, 0, 1), elem(3, 1, 2), elem(3, 0, 2)};
    mm.exp_fn = nilpotent3_exp;
    mm.log_fn = nilpotent3_log;
    return mm;
  }();
  return m;
}

const MatrixModel& model_sl2() {
  static const MatrixModel m = [] {
    MatrixModel mm;
    mm.name = "sl2";
    mm.n = 2;
    mm.dim = 3;
    Mat h(2, 2);
    h << 1, 0, 0, -1;
    mm.basis = {h, elem(2, 0, 1), elem(2, 1, 0)};
    mm.exp_fn = traceless_exp;
    mm.log_fn = traceless_log;
    return mm;
  }();
  return m;
}

const MatrixModel& model_diag2() {
  static const MatrixModel m = [] {
    MatrixModel mm;
    mm.name = "diag2";
    mm.n = 2;
    mm.dim = 2;
    mm.basis = {elem(2, 0, 0), elem(2, 1, 1)};
    mm.exp_fn = diag_exp;
    mm.log_fn = diag_log;
    return mm;
  }();
  return m;
}

Mat coords_to_matrix(const MatrixModel& m, const Vec& x) {
  if (x.size() != m.dim) {
    throw DimensionError("coords_to_matrix: wrong coordinate count");
  }
  Mat out = Mat::Zero(m.n, m.n);
  for (int i = 0; i < m.dim; ++i) out += x(i) * m.basis[i];
  return out;
}

Vec matrix_to_coords(const MatrixModel& m, const Mat& g) {
  if (g.rows() != m.n || g.cols() != m.n) {
    throw DimensionError("matrix_to_coords: wrong matrix size");
  }
  // Least-squares against the vectorized basis (the basis has full column
  // rank; for in-span inputs this is exact).
  Mat p(m.n * m.n, m.dim);
  for (int i = 0; i < m.dim; ++i) {
    p.col(i) = Eigen::Map<const Vec>(m.basis[i].data(), m.n * m.n);
  }
  const Vec rhs = Eigen::Map<const Vec>(g.data(), m.n * m.n);
  return (p.transpose() * p).ldlt().solve(p.transpose() * rhs);
}

Mat model_exp(const MatrixModel& m, const Vec& x) {
  return m.exp_fn(coords_to_matrix(m, x));
}

Vec model_log(const MatrixModel& m, const Mat& g) {
  return matrix_to_coords(m, m.log_fn(g));
}

double model_consistency_residual(const MatrixModel& m, const LieAlgebra& alg,
                                  Rng& rng, int samples) {
  if (alg.dim() != m.dim) {
    throw DimensionError("model/algebra dimension mismatch");
  }
  double worst = 0.0;
  for (int i = 0; i < m.dim; ++i) {
    for (int j = i + 1; j < m.dim; ++j) {
      const Mat comm = m.basis[i] * m.basis[j] - m.basis[j] * m.basis[i];
      const Vec expected =
          alg.bracket(unit_vec(m.dim, i), unit_vec(m.dim, j));
      worst = std::max(worst,
                       max_abs(Vec(matrix_to_coords(m, comm) - expected)));
      worst = std::max(worst,
                       max_abs(Mat(comm - coords_to_matrix(m, expected))));
    }
  }
  for (int s = 0; s < samples; ++s) {
    const Vec x = rng.vec(m.dim, -1.0, 1.0);
    worst = std::max(worst, max_abs(Vec(model_log(m, model_exp(m, x)) - x)));
  }
  return worst;
}

double fpm_hom_residual(const LieAlgebra& g, const Mat& B) {
  const int n = g.dim();
  if (B.rows() != n || B.cols() != n) {
    throw DimensionError("fpm_hom_residual: operator/algebra size mismatch");
  }
  const RelativeRBData data{adjoint_action(g), B};
  const LieAlgebra induced = graph_subalgebra(data).induced;
  const Mat Bp = B + Mat::Identity(n, n);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vec ea = unit_vec(n, a), eb = unit_vec(n, b);
      const Vec z = induced.bracket(ea, eb);
      worst = std::max(
          worst, max_abs(Vec(B * z - g.bracket(Vec(B * ea), Vec(B * eb)))));
      worst = std::max(
          worst, max_abs(Vec(Bp * z - g.bracket(Vec(Bp * ea), Vec(Bp * eb)))));
    }
  }
  return worst;
}

WordLetters random_word(const FactorizationData& fd, Rng& rng, int letters) {
  WordLetters w;
  for (int i = 0; i < letters; ++i) {
    w.push_back(rng.vec(fd.model->dim, -0.7, 0.7));
  }
  return w;
}

Mat word_Fminus(const FactorizationData& fd, const WordLetters& w) {
  Mat out = Mat::Identity(fd.model->n, fd.model->n);
  for (const Vec& u : w) out = out * model_exp(*fd.model, Vec(fd.B * u));
  return out;
}

Mat word_Fplus(const FactorizationData& fd, const WordLetters& w) {
  const Mat Bp = fd.B + Mat::Identity(fd.model->dim, fd.model->dim);
  Mat out = Mat::Identity(fd.model->n, fd.model->n);
  for (const Vec& u : w) out = out * model_exp(*fd.model, Vec(Bp * u));
  return out;
}

Mat word_J(const FactorizationData& fd, const WordLetters& w) {
  return word_Fplus(fd, w) * word_Fminus(fd, w).inverse();
}

std::pair<Mat, Mat> word_semidirect(const FactorizationData& fd,
                                    const WordLetters& w) {
  const int n = fd.model->n;
  const Mat Bp = fd.B + Mat::Identity(fd.model->dim, fd.model->dim);
  Mat g = Mat::Identity(n, n), h = Mat::Identity(n, n);
  for (const Vec& u : w) {
    const Mat gl = model_exp(*fd.model, Vec(fd.B * u));
    const Mat hl = model_exp(*fd.model, Vec(Bp * u)) * gl.inverse();
    h = h * (g * hl * g.inverse());
    g = g * gl;
  }
  return {g, h};
}

double j_graph_residual(const FactorizationData& fd, Rng& rng, int words,
                        int letters_per_word) {
  double worst = 0.0;
  for (int i = 0; i < words; ++i) {
    const WordLetters w = random_word(fd, rng, letters_per_word);
    const auto [sg, sh] = word_semidirect(fd, w);
    worst = std::max(worst, max_abs(Mat(word_J(fd, w) - sh)));
    worst = std::max(worst, max_abs(Mat(word_Fminus(fd, w) - sg)));
  }
  return worst;
}

double j_tangent_residual(const FactorizationData& fd, double step) {
  const int dim = fd.model->dim;
  double worst = 0.0;
  for (int a = 0; a < dim; ++a) {
    const Vec dir = step * unit_vec(dim, a);
    const Vec fwd = model_log(*fd.model, word_J(fd, {dir}));
    const Vec bwd = model_log(*fd.model, word_J(fd, {Vec(-dir)}));
    worst = std::max(
        worst, max_abs(Vec((fwd - bwd) / (2.0 * step) - unit_vec(dim, a))));
  }
  return worst;
}

ProbeOutcome j_inverse_probe(const FactorizationData& fd, const Mat& target,
                             int letters, long budget, Rng& rng,
                             double stop_below) {
  const int dim = fd.model->dim;
  const Objective objective = [&](const Vec& v) -> double {
    if (max_abs(v) > 20.0) return 1e6;
    WordLetters w;
    for (int i = 0; i < letters; ++i) w.push_back(v.segment(i * dim, dim));
    return max_abs(Mat(word_J(fd, w) - target));
  };
  std::vector<Vec> starts;
  // d/du J(u) at 0 is the identity, so log(target) is within O(|u|^2) of a
  // single-letter solution whenever the target is near the identity.
  try {
    const Vec guess = model_log(*fd.model, target);
    Vec s = Vec::Zero(letters * dim);
    s.head(dim) = guess;
    starts.push_back(s);
  } catch (const Error&) {
    // target too far from the chart; random starts only
  }
  starts.push_back(Vec::Zero(letters * dim));
  for (int i = 0; i < 8; ++i) starts.push_back(rng.vec(letters * dim, -0.5, 0.5));
  const OptimizeResult res = minimize(objective, starts, budget, stop_below);
  return ProbeOutcome{res.value, res.argmin, res.evals};
}

// --- catalog coordinate-group side -------------------------------------------

GWord random_gword(CatalogCase c, Rng& rng, int letters) {
  GWord w;
  const int dim = group_dim(case_group(c));
  for (int i = 0; i < letters; ++i) {
    w.letters.push_back(rng.vec(dim, -0.7, 0.7));
  }
  return w;
}

SemiElement xi2(CatalogCase c, const CatalogParams& p, const GWord& w) {
  const GroupId gid = case_group(c);
  const Mat B = case_operator(c, p);
  SemiElement out = sidentity(gid);
  for (const Vec& u : w.letters) {
    out = smul(out, sexp(gid, Vec(B * u), u));
  }
  return out;
}

Vec letter_for_target(CatalogCase c, const CatalogParams& p,
                      const GroupElement& k_target) {
  const GroupId gid = case_group(c);
  if (k_target.id != gid) {
    throw ArgumentError("letter_for_target: element from the wrong group");
  }
  if (c == CatalogCase::HEIS) {
    // The second component of sexp(Bu, u) is exactly exp(u) here.
    return glog(k_target);
  }
  if (!(k_target.c(0) > 0.0)) {
    throw DomainError("letter_for_target: target outside the chart");
  }
  const Mat B = case_operator(c, p);
  const double u1 = std::log(k_target.c(0));
  const auto hpart_b = [&](double u2) {
    const Vec u = vec2(u1, u2);
    return sexp(gid, Vec(B * u), u).h.c(1);
  };
  const double f0 = hpart_b(0.0);
  const double slope = hpart_b(1.0) - f0;
  if (std::abs(slope) < 1e-12) {
    throw DomainError("letter_for_target: degenerate letter solve");
  }
  return vec2(u1, (k_target.c(1) - f0) / slope);
}

SemiElement upsilon(CatalogCase c, const CatalogParams& p,
                    const GroupElement& g, const GWord& w) {
  return smul(SemiElement{g, gidentity(g.id)}, xi2(c, p, w));
}

UpsilonFactorization upsilon_invert(CatalogCase c, const CatalogParams& p,
                                    const SemiElement& target) {
  if (!case_integrable(c)) {
    throw PreconditionError("upsilon_invert needs an integrable case");
  }
  const GroupId gid = case_group(c);
  GroupElement g = gidentity(gid);
  if (c == CatalogCase::HEIS) {
    // Bscr(k) depends only on the last coordinate of k, which conjugation
    // preserves; so Bscr(k) is known before g is.
    const GroupElement probe =
        gmake(gid, vec3(0.0, 0.0, target.h.c(2)));
    g = gmul(target.g, ginv(case_rb_map(c, p, probe)));
  } else {
    // The first coordinate of Bscr(k) depends only on k's first coordinate,
    // which conjugation preserves; the remaining unknown coordinate of g
    // enters affinely and is fixed by a two-point solve.
    const GroupElement probe = gmake(gid, vec2(target.h.c(0), 0.0));
    const double a_g = target.g.c(0) / case_rb_map(c, p, probe).c(0);
    const auto next_b = [&](double bg) {
      const GroupElement gg = gmake(gid, vec2(a_g, bg));
      const GroupElement k = gconj(ginv(gg), target.h);
      return gmul(target.g, ginv(case_rb_map(c, p, k))).c(1);
    };
    const double n0 = next_b(0.0);
    const double slope = next_b(1.0) - n0;
    if (std::abs(1.0 - slope) < 1e-12) {
      throw PreconditionError("upsilon_invert: degenerate fixed point");
    }
    g = gmake(gid, vec2(a_g, n0 / (1.0 - slope)));
  }
  const GroupElement k = gconj(ginv(g), target.h);
  UpsilonFactorization out{g, GWord{{letter_for_target(c, p, k)}}, 0.0};
  out.residual = sdist(upsilon(c, p, out.g, out.word), target);
  return out;
}

// --- commuting squares --------------------------------------------------------

namespace {

double word_distance(const GWord& x, const GWord& y) {
  if (x.letters.size() != y.letters.size()) {
    return 1e9;
  }
  double d = 0.0;
  for (size_t i = 0; i < x.letters.size(); ++i) {
    d = std::max(d, max_abs(Vec(x.letters[i] - y.letters[i])));
  }
  return d;
}

GWord concat(const GWord& x, const GWord& y) {
  GWord out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

SemiElement xi1(const GroupElement& g) {
  return SemiElement{g, gidentity(g.id)};
}

}  // namespace

double gamma_invariant_residual(CatalogCase c, const CatalogParams& p,
                                const GammaSquare& s) {
  const SemiElement lhs = smul(xi2(c, p, s.h2), xi1(s.a1));
  const SemiElement rhs = smul(xi1(s.a2), xi2(c, p, s.h1));
  return sdist(lhs, rhs);
}

GammaSquare square_from_a2_h1(CatalogCase c, const CatalogParams& p,
                              const GroupElement& a2, const GWord& h1) {
  const SemiElement t = smul(xi1(a2), xi2(c, p, h1));
  // The second component of Xi2(h2) Xi1(a1) is Xi2(h2)'s second component.
  const GroupElement k2 = t.h;
  const GWord h2{{letter_for_target(c, p, k2)}};
  const GroupElement a1 = gmul(ginv(case_rb_map(c, p, k2)), t.g);
  return GammaSquare{h2, a2, a1, h1};
}

GammaSquare square_from_h2_a1(CatalogCase c, const CatalogParams& p,
                              const GWord& h2, const GroupElement& a1) {
  const SemiElement t = smul(xi2(c, p, h2), xi1(a1));
  const UpsilonFactorization uf = upsilon_invert(c, p, t);
  return GammaSquare{h2, uf.g, a1, uf.word};
}

GammaSquare square_from_h2_a2(CatalogCase c, const CatalogParams& p,
                              const GWord& h2, const GroupElement& a2) {
  const GroupElement k2 = xi2(c, p, h2).h;
  const GroupElement k1 = gconj(ginv(a2), k2);
  const GWord h1{{letter_for_target(c, p, k1)}};
  const GroupElement a1 = gmul(
      gmul(ginv(case_rb_map(c, p, k2)), a2), case_rb_map(c, p, k1));
  return GammaSquare{h2, a2, a1, h1};
}

GammaSquare gamma_mul_h(CatalogCase c, const GammaSquare& x,
                        const GammaSquare& y) {
  (void)c;
  if (word_distance(x.h1, y.h2) > 1e-9) {
    throw PreconditionError("horizontal composition needs h1(x) = h2(y)");
  }
  return GammaSquare{x.h2, gmul(x.a2, y.a2), gmul(x.a1, y.a1), y.h1};
}

GammaSquare gamma_mul_v(CatalogCase c, const GammaSquare& x,
                        const GammaSquare& y) {
  (void)c;
  if (gdist(x.a1, y.a2) > 1e-9) {
    throw PreconditionError("vertical composition needs a1(x) = a2(y)");
  }
  return GammaSquare{concat(x.h2, y.h2), x.a2, y.a1, concat(x.h1, y.h1)};
}

double gamma_interchange_residual(CatalogCase c, const CatalogParams& p,
                                  Rng& rng) {
  const GroupId gid = case_group(c);
  const GammaSquare xi = square_from_a2_h1(c, p, random_element(gid, rng),
                                           random_gword(c, rng, 1));
  const GammaSquare xip = square_from_h2_a1(c, p, xi.h1,
                                            random_element(gid, rng));
  const GammaSquare eta = square_from_a2_h1(c, p, xi.a1,
                                            random_gword(c, rng, 1));
  const GammaSquare etap = square_from_h2_a2(c, p, eta.h1, xip.a1);

  const GammaSquare top = gamma_mul_h(c, xi, xip);
  const GammaSquare bottom = gamma_mul_h(c, eta, etap);
  const GammaSquare left = gamma_mul_v(c, xi, eta);
  const GammaSquare right = gamma_mul_v(c, xip, etap);
  const GammaSquare p1 = gamma_mul_v(c, top, bottom);
  const GammaSquare p2 = gamma_mul_h(c, left, right);

  double worst = 0.0;
  for (const GammaSquare* s :
       {&xi, &xip, &eta, &etap, &top, &bottom, &left, &right, &p1, &p2}) {
    worst = std::max(worst, gamma_invariant_residual(c, p, *s));
  }
  worst = std::max(worst, gdist(p1.a2, p2.a2));
  worst = std::max(worst, gdist(p1.a1, p2.a1));
  worst = std::max(worst, word_distance(p1.h2, p2.h2));
  worst = std::max(worst, word_distance(p1.h1, p2.h1));
  return worst;
}

}  // namespace rbv
