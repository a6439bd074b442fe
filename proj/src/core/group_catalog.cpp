#include "group_catalog.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "errors.hpp"
#include "optimize.hpp"
#include "rota_baxter.hpp"

namespace rbv {
namespace {

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

GroupElement ut2(double a, double b) { return gmake(GroupId::UT2, v2(a, b)); }

void require_positive(double a, const char* what) {
  if (!(a > 0.0)) {
    throw DomainError(std::string(what) + " requires a positive coordinate");
  }
}

/// Long-form chart coordinate for case 3 (kept verbatim; the short form
/// ((a^2 + m) b - (m + 1) / b) / (2k) is used as an independent oracle in
/// the tests).
double case3_w(double m, double k, double a, double b) {
  const double bm = std::pow(b, -m);
  return (a * bm / (2.0 * k)) * (a * std::pow(b, m + 1.0) -
                                 std::pow(b, -m - 1.0) / a) +
         (m / (2.0 * k)) * (b - 1.0 / b) +
         (1.0 / (2.0 * k)) * (std::pow(b, -2.0 * m - 1.0) - 1.0 / b);
}

}  // namespace

const std::vector<CatalogCase>& all_cases() {
  static const std::vector<CatalogCase> cases = {
      CatalogCase::C11, CatalogCase::C12, CatalogCase::C13, CatalogCase::C21,
      CatalogCase::C22, CatalogCase::C23, CatalogCase::HEIS, CatalogCase::C3};
  return cases;
}

const std::vector<CatalogCase>& integrable_cases() {
  static const std::vector<CatalogCase> cases = {
      CatalogCase::C11, CatalogCase::C12, CatalogCase::C13, CatalogCase::C21,
      CatalogCase::C22, CatalogCase::C23, CatalogCase::HEIS};
  return cases;
}

CatalogCase parse_case(const std::string& id) {
  if (id == "1.1") return CatalogCase::C11;
  if (id == "1.2") return CatalogCase::C12;
  if (id == "1.3") return CatalogCase::C13;
  if (id == "2.1") return CatalogCase::C21;
  if (id == "2.2") return CatalogCase::C22;
  if (id == "2.3") return CatalogCase::C23;
  if (id == "heis") return CatalogCase::HEIS;
  if (id == "3") return CatalogCase::C3;
  throw ArgumentError("unknown catalog case '" + id +
                      "' (expected 1.1 1.2 1.3 2.1 2.2 2.3 heis 3)");
}

const char* case_id(CatalogCase c) {
  switch (c) {
    case CatalogCase::C11: return "1.1";
    case CatalogCase::C12: return "1.2";
    case CatalogCase::C13: return "1.3";
    case CatalogCase::C21: return "2.1";
    case CatalogCase::C22: return "2.2";
    case CatalogCase::C23: return "2.3";
    case CatalogCase::HEIS: return "heis";
    case CatalogCase::C3: return "3";
  }
  return "?";
}

void validate_params(CatalogCase c, const CatalogParams& p) {
  if (c == CatalogCase::C11 || c == CatalogCase::C23) {
    if (std::abs(p.lambda) < 1e-9 || std::abs(p.lambda + 1.0) < 1e-9) {
      throw DomainError("case " + std::string(case_id(c)) +
                        " requires lambda outside {0, -1}");
    }
  }
  if (c == CatalogCase::C3 && std::abs(p.k) < 1e-12) {
    throw DomainError("case 3 requires k != 0");
  }
}

CatalogParams random_params(CatalogCase c, Rng& rng) {
  CatalogParams p;
  p.mu = rng.uniform(-3.0, 3.0);
  do {
    p.lambda = rng.uniform(-2.5, 2.5);
  } while (std::abs(p.lambda) < 0.3 || std::abs(p.lambda + 1.0) < 0.3);
  p.m = rng.uniform(-2.0, 2.0);
  p.k = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.3, 2.0);
  validate_params(c, p);
  return p;
}

GroupId case_group(CatalogCase c) {
  return c == CatalogCase::HEIS ? GroupId::HEIS3 : GroupId::UT2;
}

bool case_integrable(CatalogCase c) { return c != CatalogCase::C3; }

Mat case_operator(CatalogCase c, const CatalogParams& p) {
  validate_params(c, p);
  switch (c) {
    case CatalogCase::C11:
      return family_operator_2d(Family2D::Family1, p.lambda, p.mu);
    case CatalogCase::C12:
      return family_operator_2d(Family2D::Family1, -1.0, p.mu);
    case CatalogCase::C13:
      return family_operator_2d(Family2D::Family1, 0.0, p.mu);
    case CatalogCase::C21:
      return family_operator_2d(Family2D::Family2, 0.0, p.mu);
    case CatalogCase::C22:
      return family_operator_2d(Family2D::Family2, -1.0, p.mu);
    case CatalogCase::C23:
      return family_operator_2d(Family2D::Family2, p.lambda, p.mu);
    case CatalogCase::HEIS: {
      Mat b = Mat::Zero(3, 3);
      b(2, 1) = 1.0;  // (x, y, z) -> (0, 0, y)
      return b;
    }
    case CatalogCase::C3:
      return family_operator_2d(Family2D::Family3, p.m, p.k);
  }
  throw ArgumentError("unreachable catalog case");
}

GroupElement case_rb_map(CatalogCase c, const CatalogParams& p,
                         const GroupElement& h) {
  validate_params(c, p);
  if (h.id != case_group(c)) {
    throw ArgumentError("case_rb_map: element belongs to the wrong group");
  }
  if (c == CatalogCase::HEIS) {
    return gmake(GroupId::HEIS3, v3(0.0, h.c(2), 0.0));
  }
  const double a = h.c(0), b = h.c(1);
  require_positive(a, "case_rb_map");
  const double mu = p.mu, lam = p.lambda;
  switch (c) {
    case CatalogCase::C11: {
      const double al = std::pow(a, lam);
      return ut2(al, mu / (2.0 * lam) * (al - 1.0 / al));
    }
    case CatalogCase::C12:
      return ut2(1.0 / a, -mu / 2.0 * (1.0 / a - a));
    case CatalogCase::C13:
      return ut2(1.0, mu * std::log(a));
    case CatalogCase::C21:
      return ut2(1.0, -b / a + mu / 2.0 * (1.0 - 1.0 / (a * a)));
    case CatalogCase::C22:
      return ut2(1.0 / a, -b + mu * std::log(a) / a);
    case CatalogCase::C23: {
      const double al = std::pow(a, lam);
      return ut2(al, mu * al / (2.0 * (lam + 1.0)) -
                         mu * std::pow(a, -lam - 2.0) / (2.0 * (lam + 1.0)) -
                         b / std::pow(a, lam + 1.0));
    }
    default:
      throw PreconditionError(
          "case 3 admits no group-level operator (see the obstruction probe)");
  }
}

double group_rb_residual_once(CatalogCase c, const CatalogParams& p,
                              const GroupElement& h1, const GroupElement& h2) {
  const GroupElement b1 = case_rb_map(c, p, h1);
  const GroupElement b2 = case_rb_map(c, p, h2);
  const GroupElement lhs = gmul(b1, b2);
  const GroupElement rhs = case_rb_map(c, p, gmul(h1, gconj(b1, h2)));
  return gdist(lhs, rhs);
}

double group_rb_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                         int pairs) {
  const GroupId gid = case_group(c);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const GroupElement h1 = random_element(gid, rng);
    const GroupElement h2 = random_element(gid, rng);
    worst = std::max(worst, group_rb_residual_once(c, p, h1, h2));
  }
  return worst;
}

double tangent_matches_algebra(CatalogCase c, const CatalogParams& p,
                               double step) {
  const GroupId gid = case_group(c);
  const int n = group_dim(gid);
  Mat numeric(n, n);
  for (int j = 0; j < n; ++j) {
    Vec dir = Vec::Zero(n);
    dir(j) = step;
    const Vec fwd = glog(case_rb_map(c, p, gexp(gid, dir)));
    const Vec bwd = glog(case_rb_map(c, p, gexp(gid, Vec(-dir))));
    numeric.col(j) = (fwd - bwd) / (2.0 * step);
  }
  return max_abs(Mat(numeric - case_operator(c, p)));
}

int d_chart_dim(CatalogCase c) { return c == CatalogCase::HEIS ? 3 : 2; }

SemiElement d_chart(CatalogCase c, const CatalogParams& p, const Vec& t) {
  validate_params(c, p);
  if (t.size() != d_chart_dim(c)) {
    throw DimensionError("d_chart: wrong parameter count");
  }
  if (c == CatalogCase::HEIS) {
    return SemiElement{gmake(GroupId::HEIS3, v3(0.0, t(2), 0.0)),
                       gmake(GroupId::HEIS3, t)};
  }
  const double a = t(0), s = t(1);
  require_positive(a, "d_chart");
  const double mu = p.mu, lam = p.lambda;
  const double lna = std::log(a);
  switch (c) {
    case CatalogCase::C11: {
      const double al = std::pow(a, lam);
      const double al1 = std::pow(a, lam + 1.0);
      const GroupElement g = ut2(al, mu / (2.0 * lam) * (al - 1.0 / al));
      const GroupElement h =
          ut2(a, -al1 * mu / (2.0 * lam) * (al - 1.0 / al) +
                     al * mu / (2.0 * (lam + 1.0)) * (al1 - 1.0 / al1) + s / a);
      return SemiElement{g, h};
    }
    case CatalogCase::C12: {
      const GroupElement g = ut2(a, -mu / 2.0 * (a - 1.0 / a));
      const GroupElement h =
          ut2(1.0 / a, mu / 2.0 * (a - 1.0 / a) - mu * a * lna + s * a);
      return SemiElement{g, h};
    }
    case CatalogCase::C13: {
      const GroupElement g = ut2(1.0, mu * lna);
      const GroupElement h =
          ut2(a, mu / 2.0 * (a - 1.0 / a) - mu * a * lna + s / a);
      return SemiElement{g, h};
    }
    case CatalogCase::C21: {
      const GroupElement g = ut2(1.0, -s + mu * lna);
      const GroupElement h =
          ut2(a, s * a + mu / 2.0 * (a - 1.0 / a) - mu * a * lna);
      return SemiElement{g, h};
    }
    case CatalogCase::C22: {
      const GroupElement g = ut2(a, -mu / 2.0 * (a - 1.0 / a) - s / a);
      const GroupElement h =
          ut2(1.0 / a, mu / 2.0 * (a - 1.0 / a) - mu * a * lna + s / a);
      return SemiElement{g, h};
    }
    case CatalogCase::C23: {
      const double al = std::pow(a, lam);
      const double al1 = std::pow(a, lam + 1.0);
      const GroupElement g =
          ut2(al, mu / (2.0 * lam) * (al - 1.0 / al) - s / al);
      const GroupElement h =
          ut2(a, -mu / (2.0 * lam) * al1 * (al - 1.0 / al) +
                     mu / (2.0 * (lam + 1.0)) * (al1 - 1.0 / al1) * al + s * a);
      return SemiElement{g, h};
    }
    case CatalogCase::C3: {
      const double b = s;
      require_positive(b, "d_chart (case 3)");
      const GroupElement g =
          ut2(a, p.m / (2.0 * p.k) * (a - 1.0 / a));
      const GroupElement h = ut2(b, case3_w(p.m, p.k, a, b));
      return SemiElement{g, h};
    }
    default:
      throw ArgumentError("unreachable catalog case");
  }
}

namespace {

Vec random_chart_point(CatalogCase c, Rng& rng) {
  const int d = d_chart_dim(c);
  Vec t(d);
  if (c == CatalogCase::HEIS) {
    for (int i = 0; i < d; ++i) t(i) = rng.uniform(-2.0, 2.0);
    return t;
  }
  t(0) = std::exp(rng.uniform(-1.0, 1.0));
  t(1) = c == CatalogCase::C3 ? std::exp(rng.uniform(-1.0, 1.0))
                              : rng.uniform(-2.0, 2.0);
  return t;
}

Vec chart_identity_point(CatalogCase c) {
  if (c == CatalogCase::HEIS) return Vec::Zero(3);
  return v2(1.0, c == CatalogCase::C3 ? 1.0 : 0.0);
}

}  // namespace

double d_chart_base_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                             int samples) {
  if (!case_integrable(c)) {
    throw PreconditionError("d_chart_base_residual needs an integrable case");
  }
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SemiElement d = d_chart(c, p, random_chart_point(c, rng));
    worst = std::max(worst, gdist(case_rb_map(c, p, d.h), d.g));
  }
  return worst;
}

double d_chart_closure_residual(CatalogCase c, const CatalogParams& p,
                                Rng& rng, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SemiElement x = d_chart(c, p, random_chart_point(c, rng));
    const SemiElement y = d_chart(c, p, random_chart_point(c, rng));
    const SemiElement prod = smul(x, y);
    if (case_integrable(c)) {
      worst = std::max(worst, gdist(case_rb_map(c, p, prod.h), prod.g));
    } else {
      // Recover the chart point from the two leading coordinates.
      const Vec t = v2(prod.g.c(0), prod.h.c(0));
      worst = std::max(worst, sdist(d_chart(c, p, t), prod));
    }
  }
  return worst;
}

ChartTangent d_chart_tangent(CatalogCase c, const CatalogParams& p,
                             double step) {
  const int d = d_chart_dim(c);
  const int n = group_dim(case_group(c));
  const Vec t0 = chart_identity_point(c);
  const Mat B = case_operator(c, p);

  Mat u_dirs(n, d);
  double graph_residual = 0.0;
  for (int i = 0; i < d; ++i) {
    Vec tf = t0, tb = t0;
    tf(i) += step;
    tb(i) -= step;
    Vec xf(n), uf(n), xb(n), ub(n);
    slog(d_chart(c, p, tf), xf, uf);
    slog(d_chart(c, p, tb), xb, ub);
    const Vec x = (xf - xb) / (2.0 * step);
    const Vec u = (uf - ub) / (2.0 * step);
    u_dirs.col(i) = u;
    graph_residual = std::max(graph_residual, max_abs(Vec(x - B * u)));
  }
  Eigen::JacobiSVD<Mat> svd(u_dirs);
  ChartTangent out;
  out.graph_residual = graph_residual;
  out.span_sigma_min = svd.singularValues().minCoeff();
  return out;
}

MembershipFactorization membership_factor(CatalogCase c,
                                          const CatalogParams& p,
                                          const SemiElement& target) {
  if (!case_integrable(c)) {
    throw PreconditionError("membership_factor needs an integrable case");
  }
  const GroupElement bh = case_rb_map(c, p, target.h);
  MembershipFactorization out;
  out.d = SemiElement{bh, target.h};
  out.remainder = gmul(ginv(bh), target.g);
  const SemiElement recombined =
      smul(out.d, SemiElement{out.remainder, gidentity(target.g.id)});
  out.residual = sdist(recombined, target);
  return out;
}

double membership_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                           int targets) {
  const GroupId gid = case_group(c);
  double worst = 0.0;
  for (int i = 0; i < targets; ++i) {
    const SemiElement target{random_element(gid, rng),
                             random_element(gid, rng)};
    worst = std::max(worst, membership_factor(c, p, target).residual);
  }
  return worst;
}

SemiElement case3_excluded_target(double m, double k, double z, Rng& rng) {
  if (!(z > 0.0)) throw DomainError("excluded target requires z > 0");
  if (std::abs(k) < 1e-12) throw DomainError("case 3 requires k != 0");
  const double w = ((m - 1.0) * z - (m + 1.0) / z) / (2.0 * k);
  const GroupElement g = random_element(GroupId::UT2, rng);
  return SemiElement{g, ut2(z, w)};
}

SemiElement case3_in_image_target(double m, double k, Rng& rng) {
  CatalogParams p;
  p.m = m;
  p.k = k;
  const SemiElement d = d_chart(CatalogCase::C3, p, v2(
      std::exp(rng.uniform(-1.0, 1.0)), std::exp(rng.uniform(-1.0, 1.0))));
  const GroupElement rem = random_element(GroupId::UT2, rng);
  return smul(d, SemiElement{rem, gidentity(GroupId::UT2)});
}

ProbeOutcome obstruction_probe(double m, double k, const SemiElement& target,
                               long budget, Rng& rng, double stop_below) {
  CatalogParams cp;
  cp.m = m;
  cp.k = k;
  validate_params(CatalogCase::C3, cp);
  const GroupElement e = gidentity(GroupId::UT2);

  // Variables v = (log a, log b, log p, q); the exponentials keep the three
  // positive chart coordinates inside their domain.
  const Objective objective = [&](const Vec& v) -> double {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(v(i)) > 30.0) return 1e6;  // reject absurd chart points
    }
    const SemiElement d =
        d_chart(CatalogCase::C3, cp, v2(std::exp(v(0)), std::exp(v(1))));
    const SemiElement probe =
        smul(d, SemiElement{ut2(std::exp(v(2)), v(3)), e});
    return sdist(probe, target);
  };

  std::vector<Vec> starts;
  // Closed-form seed: matching the h-part forces b = z and a^2 to the value
  // below; when that value is positive the target is in the image and the
  // remaining coordinates follow exactly.
  const double z = target.h.c(0), w = target.h.c(1);
  if (z > 0.0) {
    const double a2 = (2.0 * k * w + (m + 1.0) / z) / z - m;
    if (a2 > 1e-12) {
      const double a = std::sqrt(a2);
      const double vcoord = m / (2.0 * k) * (a - 1.0 / a);
      const double pp = target.g.c(0) / a;
      if (pp > 0.0) {
        const double q = (target.g.c(1) - vcoord / pp) / a;
        Vec s(4);
        s << std::log(a), std::log(z), std::log(pp), q;
        starts.push_back(s);
      }
    }
  }
  Vec origin = Vec::Zero(4);
  starts.push_back(origin);
  for (int i = 0; i < 14; ++i) starts.push_back(rng.vec(4, -1.5, 1.5));

  const OptimizeResult res = minimize(objective, starts, budget, stop_below);
  ProbeOutcome out;
  out.residual = res.value;
  out.argmin = res.argmin;
  out.evals = res.evals;
  return out;
}

}  // namespace rbv
