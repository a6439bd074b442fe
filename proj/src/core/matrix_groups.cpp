#include "matrix_groups.hpp"

#include <cmath>

#include "errors.hpp"

namespace rbv {
namespace {

/// sinh(t)/t, continuous through t = 0.
double sinhc(double t) {
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return 1.0 + t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sinh(t) / t;
}

void check_same_group(const GroupElement& x, const GroupElement& y,
                      const char* what) {
  if (x.id != y.id) {
    throw ArgumentError(std::string(what) + ": elements from different groups");
  }
}

}  // namespace

const char* group_name(GroupId id) {
  return id == GroupId::UT2 ? "ut2" : "heis3";
}

int group_dim(GroupId id) { return id == GroupId::UT2 ? 2 : 3; }

const LieAlgebra& group_algebra(GroupId id) {
  static const LieAlgebra ut2_alg = nonabelian_2d();
  static const LieAlgebra heis_alg = heisenberg_3d();
  return id == GroupId::UT2 ? ut2_alg : heis_alg;
}

GroupElement gidentity(GroupId id) {
  GroupElement e{id, Vec::Zero(group_dim(id))};
  if (id == GroupId::UT2) e.c(0) = 1.0;
  return e;
}

GroupElement gmake(GroupId id, const Vec& coords) {
  if (coords.size() != group_dim(id)) {
    throw DimensionError("group element needs " +
                         std::to_string(group_dim(id)) + " coordinates, got " +
                         std::to_string(coords.size()));
  }
  if (id == GroupId::UT2 && !(coords(0) > 0.0)) {
    throw DomainError("ut2 chart requires first coordinate > 0");
  }
  return GroupElement{id, coords};
}

GroupElement gmul(const GroupElement& x, const GroupElement& y) {
  check_same_group(x, y, "gmul");
  GroupElement out{x.id, Vec(x.c.size())};
  if (x.id == GroupId::UT2) {
    // [[a1,b1],[0,1/a1]] * [[a2,b2],[0,1/a2]]
    out.c(0) = x.c(0) * y.c(0);
    out.c(1) = x.c(0) * y.c(1) + x.c(1) / y.c(0);
  } else {
    out.c(0) = x.c(0) + y.c(0);
    out.c(1) = x.c(1) + y.c(1) + x.c(0) * y.c(2);
    out.c(2) = x.c(2) + y.c(2);
  }
  return out;
}

GroupElement ginv(const GroupElement& x) {
  GroupElement out{x.id, Vec(x.c.size())};
  if (x.id == GroupId::UT2) {
    out.c(0) = 1.0 / x.c(0);
    out.c(1) = -x.c(1);
  } else {
    out.c(0) = -x.c(0);
    out.c(1) = x.c(0) * x.c(2) - x.c(1);
    out.c(2) = -x.c(2);
  }
  return out;
}

GroupElement gexp(GroupId id, const Vec& x) {
  if (x.size() != group_dim(id)) {
    throw DimensionError("gexp: coordinate size mismatch");
  }
  GroupElement out{id, Vec(x.size())};
  if (id == GroupId::UT2) {
    out.c(0) = std::exp(x(0));
    out.c(1) = x(1) * sinhc(x(0));
  } else {
    out.c(0) = x(0);
    out.c(1) = x(2) + 0.5 * x(0) * x(1);
    out.c(2) = x(1);
  }
  return out;
}

Vec glog(const GroupElement& g) {
  Vec x(g.c.size());
  if (g.id == GroupId::UT2) {
    if (!(g.c(0) > 0.0)) {
      throw DomainError("glog: ut2 element has non-positive first coordinate");
    }
    const double t = std::log(g.c(0));
    x(0) = t;
    x(1) = g.c(1) / sinhc(t);
  } else {
    x(0) = g.c(0);
    x(1) = g.c(2);
    x(2) = g.c(1) - 0.5 * g.c(0) * g.c(2);
  }
  return x;
}

GroupElement gconj(const GroupElement& g, const GroupElement& h) {
  check_same_group(g, h, "gconj");
  GroupElement out{g.id, Vec(g.c.size())};
  if (g.id == GroupId::UT2) {
    const double a1 = g.c(0), b1 = g.c(1), a2 = h.c(0), b2 = h.c(1);
    out.c(0) = a2;
    out.c(1) = a1 * a1 * b2 + a1 * b1 * (1.0 / a2 - a2);
  } else {
    const double p1 = g.c(0), r1 = g.c(2);
    out.c(0) = h.c(0);
    out.c(1) = h.c(1) + p1 * h.c(2) - h.c(0) * r1;
    out.c(2) = h.c(2);
  }
  return out;
}

Mat gAd(const GroupElement& g) {
  const int n = group_dim(g.id);
  Mat ad = Mat::Identity(n, n);
  if (g.id == GroupId::UT2) {
    const double a = g.c(0), b = g.c(1);
    ad(1, 0) = -2.0 * a * b;
    ad(1, 1) = a * a;
  } else {
    ad(2, 0) = -g.c(2);
    ad(2, 1) = g.c(0);
  }
  return ad;
}

double gdist(const GroupElement& x, const GroupElement& y) {
  check_same_group(x, y, "gdist");
  return max_abs(Vec(x.c - y.c));
}

Mat group_to_matrix(const GroupElement& g) {
  if (g.id == GroupId::UT2) {
    Mat m(2, 2);
    m << g.c(0), g.c(1), 0.0, 1.0 / g.c(0);
    return m;
  }
  Mat m = Mat::Identity(3, 3);
  m(0, 1) = g.c(0);
  m(0, 2) = g.c(1);
  m(1, 2) = g.c(2);
  return m;
}

GroupElement group_from_matrix(GroupId id, const Mat& m) {
  const int n = id == GroupId::UT2 ? 2 : 3;
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError("group_from_matrix: wrong matrix size");
  }
  Vec c(group_dim(id));
  if (id == GroupId::UT2) {
    c << m(0, 0), m(0, 1);
  } else {
    c << m(0, 1), m(0, 2), m(1, 2);
  }
  return gmake(id, c);
}

GroupElement random_element(GroupId id, Rng& rng) {
  Vec c(group_dim(id));
  if (id == GroupId::UT2) {
    c(0) = std::exp(rng.uniform(-1.0, 1.0));
    c(1) = rng.uniform(-2.0, 2.0);
  } else {
    for (int i = 0; i < 3; ++i) c(i) = rng.uniform(-2.0, 2.0);
  }
  return GroupElement{id, c};
}

double group_axioms_residual(GroupId id, Rng& rng, int samples) {
  const GroupElement e = gidentity(id);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const GroupElement x = random_element(id, rng);
    const GroupElement y = random_element(id, rng);
    const GroupElement z = random_element(id, rng);
    worst = std::max(worst, gdist(gmul(gmul(x, y), z), gmul(x, gmul(y, z))));
    worst = std::max(worst, gdist(gmul(x, ginv(x)), e));
    worst = std::max(worst, gdist(gmul(e, x), x));
    worst = std::max(worst, gdist(gmul(x, e), x));

    const Vec v = rng.vec(group_dim(id), -1.5, 1.5);
    worst = std::max(worst, max_abs(Vec(glog(gexp(id, v)) - v)));
    worst = std::max(worst, gdist(gexp(id, glog(x)), x));

    // Matrix realization is a homomorphism.
    worst = std::max(worst, max_abs(Mat(group_to_matrix(gmul(x, y)) -
                                        group_to_matrix(x) *
                                            group_to_matrix(y))));
    // Ad(g) . v matches conjugation of one-parameter subgroups.
    worst = std::max(worst,
                     max_abs(Vec(Vec(gAd(x) * v) - glog(gconj(x, gexp(id, v))))));
    worst = std::max(worst, gdist(gconj(x, y), gmul(gmul(x, y), ginv(x))));
  }
  return worst;
}

SemiElement sidentity(GroupId id) {
  return SemiElement{gidentity(id), gidentity(id)};
}

SemiElement smul(const SemiElement& x, const SemiElement& y) {
  return SemiElement{gmul(x.g, y.g), gmul(x.h, gconj(x.g, y.h))};
}

SemiElement sinv(const SemiElement& x) {
  const GroupElement gi = ginv(x.g);
  return SemiElement{gi, gconj(gi, ginv(x.h))};
}

double sdist(const SemiElement& x, const SemiElement& y) {
  return std::max(gdist(x.g, y.g), gdist(x.h, y.h));
}

SemiElement sexp(GroupId id, const Vec& x, const Vec& u) {
  const GroupElement gx = gexp(id, x);
  return SemiElement{gx, gmul(gexp(id, Vec(x + u)), ginv(gx))};
}

void slog(const SemiElement& s, Vec& x, Vec& u) {
  x = glog(s.g);
  u = glog(gmul(s.h, s.g)) - x;
}

}  // namespace rbv
