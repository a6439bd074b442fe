#pragma once
/// @file group_catalog.hpp
/// @brief The catalog of 2- and 3-dimensional relative Rota-Baxter operators
///        together with their group-level counterparts.
///
/// Each catalog case pairs an algebra-level operator B (on the canonical
/// 2-dimensional nonabelian algebra, or on the Heisenberg algebra) with a
/// closed-form group map Bscr : H -> G on the corresponding matrix group,
/// satisfying
///     Bscr(h1) Bscr(h2) = Bscr( h1 * C(Bscr(h1)) h2 )
/// where C is conjugation.  Case 3 carries an algebra operator that admits
/// no such group map; a numeric search probe quantifies the obstruction.
///
/// For every case the subgroup D = {(Bscr(h), h)} of G |x G is given by an
/// explicit chart; its tangent space at the identity is the graph of B.

#include <string>
#include <vector>

#include "matrix_groups.hpp"
#include "rng.hpp"

namespace rbv {

/// Central-difference step used by all tangent (derivative) checks.
inline constexpr double kFdStep = 1e-5;

enum class CatalogCase { C11, C12, C13, C21, C22, C23, HEIS, C3 };

/// All cases, in catalog order.
const std::vector<CatalogCase>& all_cases();
/// The cases that admit a group-level operator (all except C3).
const std::vector<CatalogCase>& integrable_cases();

/// Case ids: "1.1" "1.2" "1.3" "2.1" "2.2" "2.3" "heis" "3".
CatalogCase parse_case(const std::string& id);
const char* case_id(CatalogCase c);

/// Parameters; each case reads only the ones it uses:
/// C11/C23: lambda, mu.  C12/C13/C21/C22: mu.  HEIS: none.  C3: m, k.
struct CatalogParams {
  double lambda = 2.0;
  double mu = 3.0;
  double m = 0.0;
  double k = 1.0;
};

/// Throws DomainError when a parameter is outside the case's admissible set
/// (lambda in {0,-1} for C11/C23, k = 0 for C3).
void validate_params(CatalogCase c, const CatalogParams& p);

/// Random admissible parameters with moderate magnitudes.
CatalogParams random_params(CatalogCase c, Rng& rng);

GroupId case_group(CatalogCase c);
bool case_integrable(CatalogCase c);

/// Algebra-level operator matrix (2x2, or 3x3 for HEIS).
Mat case_operator(CatalogCase c, const CatalogParams& p);

/// Group-level operator Bscr.  Throws PreconditionError for C3.
GroupElement case_rb_map(CatalogCase c, const CatalogParams& p,
                         const GroupElement& h);

/// Defect of the group identity on one pair.
double group_rb_residual_once(CatalogCase c, const CatalogParams& p,
                              const GroupElement& h1, const GroupElement& h2);

/// Max defect over `pairs` random pairs.
double group_rb_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                         int pairs);

/// Max-abs difference between the numeric derivative of Bscr at the identity
/// (central differences) and the algebra operator matrix.
double tangent_matches_algebra(CatalogCase c, const CatalogParams& p,
                               double step = kFdStep);

// --- the subgroup D and its chart ------------------------------------------

/// Chart dimension: dim H (2 for the UT2 cases and C3, 3 for HEIS).
int d_chart_dim(CatalogCase c);

/// Chart point of D.  For UT2 cases t = (a, s) with a > 0 (C3: both > 0);
/// for HEIS t = (a, b, c).  t = identity-chart value gives the identity.
SemiElement d_chart(CatalogCase c, const CatalogParams& p, const Vec& t);

/// Max over samples of gdist(Bscr(h-part), g-part) on random chart points.
double d_chart_base_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                             int samples);

/// Products of chart points stay on D (checked via Bscr for integrable
/// cases, via chart inversion for C3).
double d_chart_closure_residual(CatalogCase c, const CatalogParams& p,
                                Rng& rng, int samples);

struct ChartTangent {
  double graph_residual = 0.0;  // max |x_i - B u_i| over chart directions
  double span_sigma_min = 0.0;  // smallest singular value of [u_1 .. u_d]
};

/// Central-difference tangent of the chart at the identity, compared with
/// the graph of the algebra operator.
ChartTangent d_chart_tangent(CatalogCase c, const CatalogParams& p,
                             double step = kFdStep);

// --- membership factorization ----------------------------------------------

/// target = (Bscr(h), h) * (Bscr(h)^{-1} g, e), the first factor on D and
/// the second in G x {e}.
struct MembershipFactorization {
  SemiElement d;
  GroupElement remainder;
  double residual = 0.0;
};

MembershipFactorization membership_factor(CatalogCase c,
                                          const CatalogParams& p,
                                          const SemiElement& target);

/// Max factorization residual over random targets.
double membership_residual(CatalogCase c, const CatalogParams& p, Rng& rng,
                           int targets);

// --- case 3 obstruction probe ----------------------------------------------

/// A point provably outside D * (G x {e}) for the case-3 operator: the
/// h-part is (z, ((m-1) z - (m+1)/z) / (2k)); the g-part is random.
SemiElement case3_excluded_target(double m, double k, double z, Rng& rng);

/// A random point of D * (G x {e}).
SemiElement case3_in_image_target(double m, double k, Rng& rng);

struct ProbeOutcome {
  double residual = 0.0;
  Vec argmin;
  long evals = 0;
};

/// Minimizes sdist(d_chart(a, b) * ((p, q), e), target) over a, b, p > 0
/// and q, spending at most `budget` objective evaluations.  `stop_below`
/// allows early exit once the residual is provably small enough.
ProbeOutcome obstruction_probe(double m, double k, const SemiElement& target,
                               long budget, Rng& rng,
                               double stop_below = 1e-9);

}  // namespace rbv
