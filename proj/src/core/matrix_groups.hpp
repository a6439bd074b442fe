#pragma once
/// @file matrix_groups.hpp
/// @brief Closed-form coordinate models of the two catalog groups and of the
///        semidirect square G |x G (G acting on itself by conjugation).
///
/// UT2   : elements (a, b) with a > 0, realizing [[a, b], [0, 1/a]].
/// HEIS3 : elements (p, q, r), realizing [[1, p, q], [0, 1, r], [0, 0, 1]].
///
/// Their Lie algebras are the canonical 2-dimensional nonabelian algebra
/// ([e1,e2] = 2 e2) and the 3-dimensional Heisenberg algebra ([e1,e2] = e3),
/// with basis matrices
///   UT2:   e1 = [[1,0],[0,-1]], e2 = [[0,1],[0,0]]
///   HEIS3: e1 = E12, e2 = E23, e3 = E13.
/// exp and log are exact closed forms, so every group identity here is
/// limited only by floating-point rounding.

#include <cstdint>

#include "lie_algebra.hpp"
#include "rng.hpp"

namespace rbv {

enum class GroupId { UT2, HEIS3 };

const char* group_name(GroupId id);
int group_dim(GroupId id);
const LieAlgebra& group_algebra(GroupId id);

/// A group element in chart coordinates (size = group_dim).
struct GroupElement {
  GroupId id = GroupId::UT2;
  Vec c;
};

GroupElement gidentity(GroupId id);
GroupElement gmake(GroupId id, const Vec& coords);  // validates chart domain

GroupElement gmul(const GroupElement& x, const GroupElement& y);
GroupElement ginv(const GroupElement& x);

/// exp : algebra coordinates -> group (exact closed form).
GroupElement gexp(GroupId id, const Vec& x);

/// log : group -> algebra coordinates (exact closed form, total on the chart).
Vec glog(const GroupElement& g);

/// Conjugation g h g^{-1} (closed form; equals gmul(gmul(g,h),ginv(g))).
GroupElement gconj(const GroupElement& g, const GroupElement& h);

/// Matrix of Ad(g) acting on algebra coordinates.
Mat gAd(const GroupElement& g);

/// Largest absolute coordinate difference.
double gdist(const GroupElement& x, const GroupElement& y);

/// Matrix realization (2x2 upper triangular / 3x3 unitriangular).
Mat group_to_matrix(const GroupElement& g);
GroupElement group_from_matrix(GroupId id, const Mat& m);

/// Random element with moderate coordinates: the positive chart coordinate
/// is exp(U(-1,1)); all others are U(-2,2).
GroupElement random_element(GroupId id, Rng& rng);

/// Largest defect over `samples` random triples of: associativity, inverse
/// law, identity law, exp/log round trips, and Ad(g) = matrix conjugation.
double group_axioms_residual(GroupId id, Rng& rng, int samples);

// --- semidirect square G |x_C G (conjugation action) ----------------------

/// Element (g, h) of G |x G with product
/// (g1, h1) (g2, h2) = (g1 g2, h1 * (g1 h2 g1^{-1})).
struct SemiElement {
  GroupElement g;
  GroupElement h;
};

SemiElement sidentity(GroupId id);
SemiElement smul(const SemiElement& x, const SemiElement& y);
SemiElement sinv(const SemiElement& x);
double sdist(const SemiElement& x, const SemiElement& y);

/// Exact exponential of the semidirect algebra g |x_ad g:
/// sexp(x, u) = (exp(x), exp(x + u) exp(x)^{-1})
/// (through the isomorphism (g, h) -> (h g, g) with G x G).
SemiElement sexp(GroupId id, const Vec& x, const Vec& u);

/// Exact logarithm: x = log(g), u = log(h g) - log(g).
void slog(const SemiElement& s, Vec& x, Vec& u);

}  // namespace rbv
