#pragma once
/// @file rota_baxter.hpp
/// @brief The weight-one relative operator identity and its consequences:
///        residual evaluation, the 2-dimensional classification, graph
///        subalgebras, matched pairs, the double bracket, and the
///        direct-sum-to-semidirect comparison map.
///
/// Throughout, (g, h, phi, B) means: h carries an action phi of g by
/// derivations and B : h -> g is the map under test for
///   [B(u), B(v)]_g = B( phi(B(u)) v - phi(B(v)) u + [u, v]_h ).

#include <string>
#include <vector>

#include "lie_algebra.hpp"

namespace rbv {

/// Largest absolute defect of the operator identity over basis pairs of h.
double rb_residual(const RelativeRBData& data);

/// Closed-form reduction of the identity for the 2-dimensional nonabelian
/// algebra acting on itself adjointly: the full residual equals
/// 2 * max(|e1|, |e2|) with
///   e1 = b12 (b11 + b22 + 1),
///   e2 = (b11 b22 - b12 b21) - (b11 + b22 + 1) b22.
/// Returns that value and exposes the two scalar defects.
double rb_scalar_equations_2d(const Mat& B, double& e1, double& e2);

/// Wraps a 2x2 matrix as operator data on the canonical 2-dimensional
/// nonabelian algebra with its adjoint action.
RelativeRBData rb_data_2d_adjoint(const Mat& B);

enum class Family2D { NotRB, Family1, Family2, Family3 };

/// Solution families of the identity on the 2-dimensional nonabelian algebra
/// (adjoint action).  Parameters mean:
///   Family1: [[p1, 0], [p2,  0]]
///   Family2: [[p1, 0], [p2, -1]]
///   Family3: [[-p1-1, p2], [-(p1^2+p1)/p2, p1]]   (p2 != 0)
struct Classification2D {
  Family2D family = Family2D::NotRB;
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Decides family membership entrywise with absolute tolerance `tol` and
/// extracts the family parameters.
Classification2D classify_rb_2d(const Mat& B, double tol);

/// Builds the family representative for the given parameters.
Mat family_operator_2d(Family2D family, double p1, double p2);

const char* family_name(Family2D f);

/// Graph of B inside the semidirect sum: span{ (B e_a, e_a) }.
struct GraphResult {
  /// Defect of closure: how far bracket values fall outside the graph.
  double closure_residual = 0.0;
  /// Bracket induced on graph coordinates (isomorphic copy on h's space).
  LieAlgebra induced;
};

/// Computes the graph subalgebra data.  The graph is a subalgebra exactly
/// when the operator identity holds; `closure_residual` equals that defect.
GraphResult graph_subalgebra(const RelativeRBData& data);

/// A matched pair (g, h; rho, mu): mutual actions rho of g on h and mu of h
/// on g, stored per basis vector.
struct MatchedPair {
  LieAlgebra g;
  LieAlgebra h;
  std::vector<Mat> rho;  // one (h.dim x h.dim) matrix per g basis vector
  std::vector<Mat> mu;   // one (g.dim x g.dim) matrix per h basis vector
};

/// Matched pair induced by operator data whose identity holds to `rb_tol`:
/// g paired with the graph algebra, rho = the original action read through
/// graph coordinates, mu(w_a) e_i = B(phi(e_i) e_a) + [B e_a, e_i]_g.
MatchedPair matched_pair_from_rb(const RelativeRBData& data,
                                 double rb_tol = 1e-9);

/// Largest defect of the two mutual-compatibility identities
///   rho(x)[u,v] = [rho(x)u, v] + [u, rho(x)v] + rho(mu(v)x)u - rho(mu(u)x)v,
///   mu(u)[x,y] = [mu(u)x, y] + [x, mu(u)y] + mu(rho(y)u)x - mu(rho(x)u)y,
/// over basis choices.
double matched_pair_residual(const MatchedPair& mp);

/// Largest defect of rho and mu being Lie algebra representations
/// (bracket-to-commutator) over basis pairs.
double matched_pair_representation_residual(const MatchedPair& mp);

/// The bracket on g (+) h determined by a matched pair:
///   [(x,u),(y,v)] = ([x,y]_g + mu(u)y - mu(v)x, [u,v]_h + rho(x)v - rho(y)u).
/// Jacobi holds iff the pair is matched.
LieAlgebra double_bracket(const MatchedPair& mp);

/// Defect of the canonical comparison map K(x, w_a) = (x + B e_a, e_a)
/// being a homomorphism from the double bracket of the induced matched pair
/// onto the semidirect sum g |x h.  Zero whenever the identity holds.
double kappa_residual(const RelativeRBData& data, double rb_tol = 1e-9);

}  // namespace rbv
