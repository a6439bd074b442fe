#pragma once
/// @file bialgebra.hpp
/// @brief Classical r-matrices: the Yang-Baxter equation, invariance of the
///        symmetric part, the dual bracket, the derived Rota-Baxter operator
///        B = r- I^{-1}, and the associated multiplicative Poisson bivector.
///
/// An r-matrix is stored as its coefficient matrix R (r = sum R^{ij} e_i (x)
/// e_j).  The two induced maps from the dual are r+ = R^T and r- = -R; their
/// difference I = R + R^T is the symmetrization.  When I is invertible the
/// operator B = (-R)(R + R^T)^{-1} satisfies the Rota-Baxter identity for
/// the adjoint action, and xi -> (r- xi, I xi) identifies the dual algebra
/// with the graph of B.

#include "factorization.hpp"
#include "lie_algebra.hpp"
#include "rng.hpp"

namespace rbv {

struct RMatrix {
  LieAlgebra alg;
  Mat r;  // dim x dim coefficient matrix
};

RMatrix make_rmatrix(const LieAlgebra& alg, const Mat& r);

/// The standard factorizable r-matrix on sl2 (basis h, e, f):
/// r = (1/4) h (x) h + e (x) f.
RMatrix sl2_standard_rmatrix();

Mat antisymmetric_part(const RMatrix& rm);  // (R - R^T) / 2
Mat symmetric_part(const RMatrix& rm);      // (R + R^T) / 2
Mat r_plus(const RMatrix& rm);              // R^T
Mat r_minus(const RMatrix& rm);             // -R
Mat big_I(const RMatrix& rm);               // R + R^T = r+ - r-

/// Max-abs component of [[r, r]] (all three partial-bracket terms).
double cybe_residual(const RMatrix& rm);

/// Max-abs component of ad-invariance of the symmetric part.
double invariance_residual(const RMatrix& rm);

/// True when I = R + R^T passes the scale-aware invertibility test.
bool is_factorizable(const RMatrix& rm);

/// Lie algebra on the dual space with
/// [e^a, e^b]_c = -sum_j R^{aj} c^b_{jc} - sum_i R^{ib} c^a_{ic}.
/// Throws PreconditionError if the result is not antisymmetric (which
/// happens exactly when the symmetric part is not invariant).
LieAlgebra dual_algebra(const RMatrix& rm);

/// Defect of r+ and r- as Lie algebra maps from the dual into the algebra.
double rpm_hom_residual(const RMatrix& rm);

/// Defect of xi -> (r- xi, I xi) as a map from the dual onto the graph of
/// the derived operator (both components checked against the semidirect
/// bracket of graph elements).
double ihat_graph_residual(const RMatrix& rm);

/// B = (-R)(R + R^T)^{-1}.  Throws SingularError when I is not invertible.
Mat derived_rb_operator(const RMatrix& rm);

/// Multiplicative Poisson bivector attached to the antisymmetric part on a
/// matrix model of the algebra: pi(g) = (g.)(x2) a - (.g)(x2) a.  Returns
/// the max defect of pi(gh) = L_g pi(h) + R_h pi(g) over random pairs.
double poisson_multiplicativity_residual(const MatrixModel& model,
                                         const RMatrix& rm, Rng& rng,
                                         int pairs);

/// pi at the identity matrix (exactly zero for any r).
double poisson_identity_residual(const MatrixModel& model, const RMatrix& rm);

/// The bivector at one group point, as an n^2 x n^2 matrix acting on
/// vectorized matrices.
Mat poisson_bivector(const MatrixModel& model, const RMatrix& rm,
                     const Mat& g);

}  // namespace rbv
