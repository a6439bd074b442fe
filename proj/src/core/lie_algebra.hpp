#pragma once
/// @file lie_algebra.hpp
/// @brief Finite-dimensional real Lie algebras given by structure constants,
///        linear maps between them, and actions by derivations.
///
/// An algebra of dimension n stores the constants c^k_{ij} defined by
/// [e_i, e_j] = sum_k c^k_{ij} e_k.  Only pairs i < j are taken as input;
/// antisymmetry fills in the rest and the diagonal is forced to zero.

#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace rbv {

/// Maximum supported dimension for any single algebra in this tool.  The
/// verification targets are all small; this guards against absurd input.
inline constexpr int kMaxDim = 16;

/// One structure constant c^k_{ij} (0-based, canonical form i < j).
struct StructEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

class LieAlgebra {
 public:
  /// Builds an algebra from canonical entries.  Entries with i > j are
  /// flipped (negating the value); i == j must have value 0.  Duplicate
  /// (i, j, k) keys accumulate.
  LieAlgebra(std::string name, int dim, const std::vector<StructEntry>& entries);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  /// c^k_{ij} for arbitrary i, j (antisymmetry applied).
  double c(int i, int j, int k) const;

  /// Canonical nonzero entries, sorted by (i, j, k) with i < j.
  const std::vector<StructEntry>& entries() const { return entries_; }

  /// [x, y] by bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad(x) = [x, .] in the chosen basis.
  Mat ad(const Vec& x) const;

  /// Largest absolute defect of the Jacobi identity
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  /// over all basis triples.
  double jacobi_residual() const;

 private:
  void check_index(int i) const;

  std::string name_;
  int dim_;
  std::vector<double> dense_;          // (i*dim + j)*dim + k
  std::vector<StructEntry> entries_;   // canonical sorted nonzeros
};

/// A linear map between (the underlying spaces of) two algebras.
/// Stored with its endpoint dimensions so shape errors surface early.
struct LinearOperator {
  int domain_dim = 0;
  int codomain_dim = 0;
  Mat m;  // codomain_dim x domain_dim

  LinearOperator() = default;
  LinearOperator(int dom, int cod, Mat mat);

  Vec apply(const Vec& x) const;
};

/// An action of algebra `actor` on the space of algebra `target`:
/// x -> phi(x), a matrix acting on target coordinates, linear in x.
/// phi(e_i) is stored per basis vector of the actor.
class LieAction {
 public:
  LieAction(LieAlgebra actor, LieAlgebra target, std::vector<Mat> phi);

  const LieAlgebra& actor() const { return actor_; }
  const LieAlgebra& target() const { return target_; }
  const Mat& phi(int i) const { return phi_[i]; }

  /// phi(x) for an arbitrary actor element x.
  Mat of(const Vec& x) const;

  /// Largest defect of the action property
  /// phi([x,y]) = phi(x) phi(y) - phi(y) phi(x) over basis pairs.
  double action_residual() const;

  /// Largest defect of the derivation property
  /// phi(x)[u,v] = [phi(x)u, v] + [u, phi(x)v] over basis triples.
  double derivation_residual() const;

 private:
  LieAlgebra actor_;
  LieAlgebra target_;
  std::vector<Mat> phi_;
};

/// Action data plus a candidate structure map B : target -> actor.
/// (The map under test for the weight-one relative operator identity.)
struct RelativeRBData {
  LieAction action;
  Mat B;  // actor.dim x target.dim

  RelativeRBData(LieAction a, Mat b);

  const LieAlgebra& g() const { return action.actor(); }
  const LieAlgebra& h() const { return action.target(); }
};

/// The adjoint action of an algebra on itself: phi(e_i) = ad(e_i).
LieAction adjoint_action(const LieAlgebra& g);

/// Semidirect sum g |x h for an action of g on h by derivations:
/// [(x,u),(y,v)] = ([x,y]_g, phi(x)v - phi(y)u + [u,v]_h),
/// basis ordered as (g basis, then h basis).
LieAlgebra semidirect_algebra(const LieAction& action);

/// Conjugates an operator T on h through a vector-space isomorphism
/// iso : g -> h that must also be a Lie algebra homomorphism
/// (checked to `hom_tol`): returns iso^{-1} o T o iso on g.
LinearOperator transport_operator(const LieAlgebra& g, const LieAlgebra& h,
                                  const LinearOperator& T, const Mat& iso,
                                  double hom_tol = 1e-9);

// --- canonical algebras used by the built-in checks -----------------------

/// 2-dimensional nonabelian algebra: [e1, e2] = 2 e2.
LieAlgebra nonabelian_2d();

/// 3-dimensional Heisenberg algebra: [e1, e2] = e3.
LieAlgebra heisenberg_3d();

/// sl(2): basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();

/// Abelian algebra of the given dimension.
LieAlgebra abelian(int dim);

/// 2-dimensional algebra with [u1, u2] = 2 u2 - 2 u1 (isomorphic to
/// nonabelian_2d through u1 -> e1, u2 -> e1 + e2).
LieAlgebra nonabelian_2d_mixed();

}  // namespace rbv
