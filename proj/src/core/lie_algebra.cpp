/// @file lie_algebra.cpp

#include "lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rbv {

LieAlgebra::LieAlgebra(std::string name, int dim,
                       const std::vector<StructEntry>& entries)
    : name_(std::move(name)), dim_(dim) {
  if (dim_ < 1 || dim_ > kMaxDim)
    throw DimensionError("algebra dimension must be in [1, " +
                         std::to_string(kMaxDim) + "], got " +
                         std::to_string(dim_));
  dense_.assign(static_cast<size_t>(dim_) * dim_ * dim_, 0.0);
  for (const StructEntry& e : entries) {
    check_index(e.i);
    check_index(e.j);
    check_index(e.k);
    if (e.i == e.j) {
      if (e.value != 0.0)
        throw ParseError("structure constant with i == j must vanish ([e_i, e_i] = 0)");
      continue;
    }
    int i = e.i, j = e.j;
    double v = e.value;
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    dense_[(static_cast<size_t>(i) * dim_ + j) * dim_ + e.k] += v;
    dense_[(static_cast<size_t>(j) * dim_ + i) * dim_ + e.k] -= v;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const double v = dense_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
        if (v != 0.0) entries_.push_back({i, j, k, v});
      }
}

void LieAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim_)
    throw DimensionError("basis index " + std::to_string(i) +
                         " out of range for dimension " + std::to_string(dim_));
}

double LieAlgebra::c(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  return dense_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("bracket operands must have dimension " +
                         std::to_string(dim_));
  Vec out = Vec::Zero(dim_);
  for (const StructEntry& e : entries_) {
    const double w = x(e.i) * y(e.j) - x(e.j) * y(e.i);
    if (w != 0.0) out(e.k) += e.value * w;
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_)
    throw DimensionError("ad operand must have dimension " + std::to_string(dim_));
  Mat m = Mat::Zero(dim_, dim_);
  for (const StructEntry& e : entries_) {
    // [x, e_j] contributes x_i c^k_{ij} to column j; antisymmetric partner too.
    m(e.k, e.j) += x(e.i) * e.value;
    m(e.k, e.i) -= x(e.j) * e.value;
  }
  return m;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const Vec ei = unit_vec(dim_, i);
    for (int j = i + 1; j < dim_; ++j) {
      const Vec ej = unit_vec(dim_, j);
      for (int k = j + 1; k < dim_; ++k) {
        const Vec ek = unit_vec(dim_, k);
        const Vec defect = bracket(bracket(ei, ej), ek) +
                           bracket(bracket(ej, ek), ei) +
                           bracket(bracket(ek, ei), ej);
        worst = std::max(worst, max_abs(defect));
      }
    }
  }
  return worst;
}

LinearOperator::LinearOperator(int dom, int cod, Mat mat)
    : domain_dim(dom), codomain_dim(cod), m(std::move(mat)) {
  if (m.rows() != codomain_dim || m.cols() != domain_dim)
    throw DimensionError("operator matrix must be codomain x domain (" +
                         std::to_string(codomain_dim) + " x " +
                         std::to_string(domain_dim) + "), got " +
                         std::to_string(m.rows()) + " x " +
                         std::to_string(m.cols()));
}

Vec LinearOperator::apply(const Vec& x) const {
  if (x.size() != domain_dim)
    throw DimensionError("operator applied to vector of dimension " +
                         std::to_string(x.size()) + ", expected " +
                         std::to_string(domain_dim));
  return m * x;
}

LieAction::LieAction(LieAlgebra actor, LieAlgebra target, std::vector<Mat> phi)
    : actor_(std::move(actor)), target_(std::move(target)), phi_(std::move(phi)) {
  if (static_cast<int>(phi_.size()) != actor_.dim())
    throw DimensionError("action needs one matrix per actor basis vector");
  for (const Mat& p : phi_)
    if (p.rows() != target_.dim() || p.cols() != target_.dim())
      throw DimensionError("action matrices must be square of the target dimension");
}

Mat LieAction::of(const Vec& x) const {
  if (x.size() != actor_.dim())
    throw DimensionError("action argument must lie in the actor algebra");
  Mat m = Mat::Zero(target_.dim(), target_.dim());
  for (int i = 0; i < actor_.dim(); ++i)
    if (x(i) != 0.0) m += x(i) * phi_[i];
  return m;
}

double LieAction::action_residual() const {
  double worst = 0.0;
  const int n = actor_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Mat lhs = of(actor_.bracket(unit_vec(n, i), unit_vec(n, j)));
      const Mat rhs = phi_[i] * phi_[j] - phi_[j] * phi_[i];
      worst = std::max(worst, max_abs(Mat(lhs - rhs)));
    }
  return worst;
}

double LieAction::derivation_residual() const {
  double worst = 0.0;
  const int nh = target_.dim();
  for (int i = 0; i < actor_.dim(); ++i)
    for (int a = 0; a < nh; ++a) {
      const Vec pa = phi_[i].col(a);
      for (int b = a + 1; b < nh; ++b) {
        const Vec ea = unit_vec(nh, a), eb = unit_vec(nh, b);
        const Vec lhs = phi_[i] * target_.bracket(ea, eb);
        const Vec rhs = target_.bracket(pa, eb) + target_.bracket(ea, phi_[i].col(b));
        worst = std::max(worst, max_abs(Vec(lhs - rhs)));
      }
    }
  return worst;
}

RelativeRBData::RelativeRBData(LieAction a, Mat b)
    : action(std::move(a)), B(std::move(b)) {
  if (B.rows() != action.actor().dim() || B.cols() != action.target().dim())
    throw DimensionError("structure map must be actor_dim x target_dim (" +
                         std::to_string(action.actor().dim()) + " x " +
                         std::to_string(action.target().dim()) + "), got " +
                         std::to_string(B.rows()) + " x " +
                         std::to_string(B.cols()));
}

LieAction adjoint_action(const LieAlgebra& g) {
  std::vector<Mat> phi;
  phi.reserve(g.dim());
  for (int i = 0; i < g.dim(); ++i) phi.push_back(g.ad(unit_vec(g.dim(), i)));
  return LieAction(g, g, std::move(phi));
}

LieAlgebra semidirect_algebra(const LieAction& action) {
  const LieAlgebra& g = action.actor();
  const LieAlgebra& h = action.target();
  const int ng = g.dim(), nh = h.dim();
  std::vector<StructEntry> entries;
  for (const StructEntry& e : g.entries()) entries.push_back(e);
  for (const StructEntry& e : h.entries())
    entries.push_back({ng + e.i, ng + e.j, ng + e.k, e.value});
  for (int i = 0; i < ng; ++i)
    for (int a = 0; a < nh; ++a)
      for (int c = 0; c < nh; ++c) {
        const double v = action.phi(i)(c, a);
        if (v != 0.0) entries.push_back({i, ng + a, ng + c, v});
      }
  return LieAlgebra(g.name() + "|x" + h.name(), ng + nh, entries);
}

LinearOperator transport_operator(const LieAlgebra& g, const LieAlgebra& h,
                                  const LinearOperator& T, const Mat& iso,
                                  double hom_tol) {
  if (g.dim() != h.dim())
    throw DimensionError("operator transport needs algebras of equal dimension");
  const int n = g.dim();
  if (T.domain_dim != n || T.codomain_dim != n)
    throw DimensionError("transported operator must act on the second algebra");
  if (iso.rows() != n || iso.cols() != n)
    throw DimensionError("isomorphism matrix must be square of the common dimension");
  if (is_singular(iso))
    throw SingularError("isomorphism matrix is numerically singular");

  double hom_defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec lhs = iso * g.bracket(unit_vec(n, i), unit_vec(n, j));
      const Vec rhs = h.bracket(iso.col(i), iso.col(j));
      hom_defect = std::max(hom_defect, max_abs(Vec(lhs - rhs)));
    }
  if (hom_defect > hom_tol)
    throw PreconditionError("transport map is not a Lie algebra homomorphism "
                            "(defect " + std::to_string(hom_defect) + ")");

  const Mat conj = iso.partialPivLu().solve(T.m * iso);
  return LinearOperator(n, n, conj);
}

LieAlgebra nonabelian_2d() {
  return LieAlgebra("nonabelian2", 2, {{0, 1, 1, 2.0}});
}

LieAlgebra heisenberg_3d() {
  return LieAlgebra("heis3", 3, {{0, 1, 2, 1.0}});
}

LieAlgebra sl2() {
  return LieAlgebra("sl2", 3, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

LieAlgebra abelian(int dim) {
  return LieAlgebra("abelian" + std::to_string(dim), dim, {});
}

LieAlgebra nonabelian_2d_mixed() {
  return LieAlgebra("nonabelian2mixed", 2, {{0, 1, 0, -2.0}, {0, 1, 1, 2.0}});
}

}  // namespace rbv
