/// @file rota_baxter.cpp

#include "rota_baxter.hpp"

#include <algorithm>
#include <cmath>

namespace rbv {

double rb_residual(const RelativeRBData& data) {
  const LieAlgebra& g = data.g();
  const LieAlgebra& h = data.h();
  const int nh = h.dim();
  double worst = 0.0;
  for (int a = 0; a < nh; ++a) {
    const Vec ea = unit_vec(nh, a);
    const Vec Ba = data.B.col(a);
    const Mat phiBa = data.action.of(Ba);
    for (int b = a + 1; b < nh; ++b) {
      const Vec eb = unit_vec(nh, b);
      const Vec Bb = data.B.col(b);
      const Vec lhs = g.bracket(Ba, Bb);
      const Vec inner = phiBa * eb - data.action.of(Bb) * ea + h.bracket(ea, eb);
      const Vec rhs = data.B * inner;
      worst = std::max(worst, max_abs(Vec(lhs - rhs)));
    }
  }
  return worst;
}

double rb_scalar_equations_2d(const Mat& B, double& e1, double& e2) {
  if (B.rows() != 2 || B.cols() != 2)
    throw DimensionError("the 2-dimensional reduction needs a 2 x 2 matrix");
  const double b11 = B(0, 0), b12 = B(0, 1), b21 = B(1, 0), b22 = B(1, 1);
  const double trace1 = b11 + b22 + 1.0;
  e1 = b12 * trace1;
  e2 = (b11 * b22 - b12 * b21) - trace1 * b22;
  return 2.0 * std::max(std::abs(e1), std::abs(e2));
}

RelativeRBData rb_data_2d_adjoint(const Mat& B) {
  if (B.rows() != 2 || B.cols() != 2)
    throw DimensionError("adjoint wrapper for the 2-dimensional algebra needs a 2 x 2 matrix");
  return RelativeRBData(adjoint_action(nonabelian_2d()), B);
}

Classification2D classify_rb_2d(const Mat& B, double tol) {
  if (B.rows() != 2 || B.cols() != 2)
    throw DimensionError("classification needs a 2 x 2 matrix");
  if (!(tol >= 0.0))
    throw ArgumentError("classification tolerance must be non-negative");
  const double b11 = B(0, 0), b12 = B(0, 1), b21 = B(1, 0), b22 = B(1, 1);
  Classification2D out;
  if (std::abs(b12) <= tol) {
    if (std::abs(b22) <= tol) {
      out.family = Family2D::Family1;
      out.p1 = b11;
      out.p2 = b21;
    } else if (std::abs(b22 + 1.0) <= tol) {
      out.family = Family2D::Family2;
      out.p1 = b11;
      out.p2 = b21;
    }
  } else if (std::abs(b11 + b22 + 1.0) <= tol &&
             std::abs(b21 * b12 - b11 * b22) <= tol) {
    out.family = Family2D::Family3;
    out.p1 = b22;
    out.p2 = b12;
  }
  return out;
}

Mat family_operator_2d(Family2D family, double p1, double p2) {
  Mat B(2, 2);
  switch (family) {
    case Family2D::Family1:
      B << p1, 0.0, p2, 0.0;
      return B;
    case Family2D::Family2:
      B << p1, 0.0, p2, -1.0;
      return B;
    case Family2D::Family3:
      if (p2 == 0.0)
        throw DomainError("third family requires a nonzero off-diagonal parameter");
      B << -p1 - 1.0, p2, -(p1 * p1 + p1) / p2, p1;
      return B;
    case Family2D::NotRB:
      break;
  }
  throw ArgumentError("no representative matrix for the non-solution class");
}

const char* family_name(Family2D f) {
  switch (f) {
    case Family2D::Family1: return "family1";
    case Family2D::Family2: return "family2";
    case Family2D::Family3: return "family3";
    case Family2D::NotRB: break;
  }
  return "not-rb";
}

GraphResult graph_subalgebra(const RelativeRBData& data) {
  const LieAlgebra& g = data.g();
  const LieAlgebra& h = data.h();
  const int ng = g.dim(), nh = h.dim();
  const LieAlgebra semi = semidirect_algebra(data.action);

  // Graph basis w_a = (B e_a, e_a) in semidirect coordinates.
  Mat W = Mat::Zero(ng + nh, nh);
  W.topRows(ng) = data.B;
  W.bottomRows(nh) = Mat::Identity(nh, nh);

  double worst = 0.0;
  std::vector<StructEntry> entries;
  for (int a = 0; a < nh; ++a)
    for (int b = a + 1; b < nh; ++b) {
      const Vec z = semi.bracket(W.col(a), W.col(b));
      const Vec zg = z.head(ng);
      const Vec zh = z.tail(nh);
      // [w_a, w_b] lies on the graph iff its g-part equals B of its h-part.
      worst = std::max(worst, max_abs(Vec(zg - data.B * zh)));
      for (int c = 0; c < nh; ++c)
        if (zh(c) != 0.0) entries.push_back({a, b, c, zh(c)});
    }
  return GraphResult{worst, LieAlgebra(h.name() + ".graph", nh, entries)};
}

MatchedPair matched_pair_from_rb(const RelativeRBData& data, double rb_tol) {
  const double defect = rb_residual(data);
  if (!(defect <= rb_tol))
    throw PreconditionError(
        "matched pair requires the operator identity to hold (defect " +
        std::to_string(defect) + ")");
  const LieAlgebra& g = data.g();
  const int ng = g.dim(), nh = data.h().dim();
  GraphResult graph = graph_subalgebra(data);

  // rho: the original action, read in graph coordinates (w_a ~ e_a).
  std::vector<Mat> rho;
  rho.reserve(ng);
  for (int i = 0; i < ng; ++i) rho.push_back(data.action.phi(i));

  // mu(w_a) e_i = B(phi(e_i) e_a) + [B e_a, e_i]_g.
  std::vector<Mat> mu(nh, Mat::Zero(ng, ng));
  for (int a = 0; a < nh; ++a) {
    const Vec Ba = data.B.col(a);
    for (int i = 0; i < ng; ++i)
      mu[a].col(i) =
          data.B * data.action.phi(i).col(a) + g.bracket(Ba, unit_vec(ng, i));
  }
  return MatchedPair{g, std::move(graph.induced), std::move(rho), std::move(mu)};
}

namespace {

Mat act_of(const std::vector<Mat>& mats, const Vec& x) {
  Mat m = Mat::Zero(mats.empty() ? 0 : mats[0].rows(),
                    mats.empty() ? 0 : mats[0].cols());
  for (int i = 0; i < static_cast<int>(mats.size()); ++i)
    if (x(i) != 0.0) m += x(i) * mats[i];
  return m;
}

void check_pair_shapes(const MatchedPair& mp) {
  const int ng = mp.g.dim(), nh = mp.h.dim();
  if (static_cast<int>(mp.rho.size()) != ng ||
      static_cast<int>(mp.mu.size()) != nh)
    throw DimensionError("matched pair needs one rho per g basis vector and one mu per h basis vector");
  for (const Mat& r : mp.rho)
    if (r.rows() != nh || r.cols() != nh)
      throw DimensionError("rho matrices must be square of h's dimension");
  for (const Mat& m : mp.mu)
    if (m.rows() != ng || m.cols() != ng)
      throw DimensionError("mu matrices must be square of g's dimension");
}

}  // namespace

double matched_pair_residual(const MatchedPair& mp) {
  check_pair_shapes(mp);
  const int ng = mp.g.dim(), nh = mp.h.dim();
  double worst = 0.0;
  // rho(e_i)[e_a,e_b] = [rho_i e_a, e_b] + [e_a, rho_i e_b]
  //                     + rho(mu(e_b) e_i) e_a - rho(mu(e_a) e_i) e_b.
  for (int i = 0; i < ng; ++i)
    for (int a = 0; a < nh; ++a)
      for (int b = a + 1; b < nh; ++b) {
        const Vec ea = unit_vec(nh, a), eb = unit_vec(nh, b);
        const Vec lhs = mp.rho[i] * mp.h.bracket(ea, eb);
        const Vec rhs = mp.h.bracket(mp.rho[i].col(a), eb) +
                        mp.h.bracket(ea, mp.rho[i].col(b)) +
                        act_of(mp.rho, mp.mu[b].col(i)) * ea -
                        act_of(mp.rho, mp.mu[a].col(i)) * eb;
        worst = std::max(worst, max_abs(Vec(lhs - rhs)));
      }
  // mu(e_a)[e_i,e_j] = [mu_a e_i, e_j] + [e_i, mu_a e_j]
  //                    + mu(rho(e_j) e_a) e_i - mu(rho(e_i) e_a) e_j.
  for (int a = 0; a < nh; ++a)
    for (int i = 0; i < ng; ++i)
      for (int j = i + 1; j < ng; ++j) {
        const Vec ei = unit_vec(ng, i), ej = unit_vec(ng, j);
        const Vec lhs = mp.mu[a] * mp.g.bracket(ei, ej);
        const Vec rhs = mp.g.bracket(mp.mu[a].col(i), ej) +
                        mp.g.bracket(ei, mp.mu[a].col(j)) +
                        act_of(mp.mu, mp.rho[j].col(a)) * ei -
                        act_of(mp.mu, mp.rho[i].col(a)) * ej;
        worst = std::max(worst, max_abs(Vec(lhs - rhs)));
      }
  return worst;
}

double matched_pair_representation_residual(const MatchedPair& mp) {
  check_pair_shapes(mp);
  const int ng = mp.g.dim(), nh = mp.h.dim();
  double worst = 0.0;
  for (int i = 0; i < ng; ++i)
    for (int j = i + 1; j < ng; ++j) {
      const Mat lhs = act_of(mp.rho, mp.g.bracket(unit_vec(ng, i), unit_vec(ng, j)));
      const Mat rhs = mp.rho[i] * mp.rho[j] - mp.rho[j] * mp.rho[i];
      worst = std::max(worst, max_abs(Mat(lhs - rhs)));
    }
  for (int a = 0; a < nh; ++a)
    for (int b = a + 1; b < nh; ++b) {
      const Mat lhs = act_of(mp.mu, mp.h.bracket(unit_vec(nh, a), unit_vec(nh, b)));
      const Mat rhs = mp.mu[a] * mp.mu[b] - mp.mu[b] * mp.mu[a];
      worst = std::max(worst, max_abs(Mat(lhs - rhs)));
    }
  return worst;
}

LieAlgebra double_bracket(const MatchedPair& mp) {
  check_pair_shapes(mp);
  const int ng = mp.g.dim(), nh = mp.h.dim();
  std::vector<StructEntry> entries;
  for (const StructEntry& e : mp.g.entries()) entries.push_back(e);
  for (const StructEntry& e : mp.h.entries())
    entries.push_back({ng + e.i, ng + e.j, ng + e.k, e.value});
  // [(e_i, 0), (0, e_a)] = (-mu(e_a) e_i, rho(e_i) e_a).
  for (int i = 0; i < ng; ++i)
    for (int a = 0; a < nh; ++a) {
      for (int k = 0; k < ng; ++k) {
        const double v = -mp.mu[a](k, i);
        if (v != 0.0) entries.push_back({i, ng + a, k, v});
      }
      for (int c = 0; c < nh; ++c) {
        const double v = mp.rho[i](c, a);
        if (v != 0.0) entries.push_back({i, ng + a, ng + c, v});
      }
    }
  return LieAlgebra(mp.g.name() + "><" + mp.h.name(), ng + nh, entries);
}

double kappa_residual(const RelativeRBData& data, double rb_tol) {
  const MatchedPair mp = matched_pair_from_rb(data, rb_tol);
  const LieAlgebra dbl = double_bracket(mp);
  const LieAlgebra semi = semidirect_algebra(data.action);
  const int ng = data.g().dim(), nh = data.h().dim(), n = ng + nh;

  // K acts as identity on g and sends the graph coordinate w_a to
  // (B e_a, e_a) in semidirect coordinates.
  Mat K = Mat::Identity(n, n);
  K.block(0, ng, ng, nh) = data.B;

  double worst = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const Vec ep = unit_vec(n, p), eq = unit_vec(n, q);
      const Vec lhs = K * dbl.bracket(ep, eq);
      const Vec rhs = semi.bracket(K * ep, K * eq);
      worst = std::max(worst, max_abs(Vec(lhs - rhs)));
    }
  return worst;
}

}  // namespace rbv
