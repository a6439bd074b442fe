#pragma once
/// @file factorization.hpp
/// @brief Word-level factorization maps attached to a Rota-Baxter operator,
///        and the big groupoid of commuting squares.
///
/// For an operator B on the algebra of a matrix model, a word with letters
/// u_1 .. u_N represents the product of graph exponentials.  Two homomorphic
/// images are formed letterwise,
///     F-(word) = prod exp(B u_i),     F+(word) = prod exp((B + I) u_i),
/// and J(word) = F+(word) F-(word)^{-1}.  The same word evaluated in the
/// semidirect square G |x G (conjugation action) has group part F- and its
/// second component recovers J exactly; this gives two independent routes
/// to every J value.
///
/// On the catalog coordinate groups the corresponding objects are
///     Xi1(g) = (g, e),   Xi2(word) = prod sexp(B u_i, u_i),
///     Upsilon(g, word) = Xi1(g) Xi2(word),
/// and the commuting squares (h2, a2, a1, h1) with
///     Xi2(h2) Xi1(a1) = Xi1(a2) Xi2(h1),
/// which compose horizontally and vertically and satisfy the interchange
/// law.

#include <string>
#include <utility>
#include <vector>

#include "group_catalog.hpp"
#include "lie_algebra.hpp"
#include "matrix_groups.hpp"
#include "rng.hpp"

namespace rbv {

// --- matrix models -----------------------------------------------------------

/// A linear basis of an n x n matrix Lie algebra with exact exp/log.
struct MatrixModel {
  std::string name;
  int n = 0;    // matrix size
  int dim = 0;  // algebra dimension
  std::vector<Mat> basis;
  Mat (*exp_fn)(const Mat&) = nullptr;
  Mat (*log_fn)(const Mat&) = nullptr;
};

const MatrixModel& model_ut2();    // [[x, y], [0, -x]]
const MatrixModel& model_heis3();  // strictly upper triangular 3x3
const MatrixModel& model_sl2();    // traceless 2x2, basis (h, e, f)
const MatrixModel& model_diag2();  // commuting diagonal 2x2

Mat coords_to_matrix(const MatrixModel& m, const Vec& x);
Vec matrix_to_coords(const MatrixModel& m, const Mat& g);
Mat model_exp(const MatrixModel& m, const Vec& x);
Vec model_log(const MatrixModel& m, const Mat& g);

/// Structure constants of the model agree with the given algebra, and
/// exp/log are mutually inverse on random draws.
double model_consistency_residual(const MatrixModel& m, const LieAlgebra& alg,
                                  Rng& rng, int samples);

// --- algebra-level factorization homomorphisms -------------------------------

/// Defect of f-(Bu, u) = Bu and f+(Bu, u) = Bu + u as Lie algebra
/// homomorphisms from the graph of B into the algebra.
double fpm_hom_residual(const LieAlgebra& g, const Mat& B);

// --- word-level maps on a matrix model ---------------------------------------

struct FactorizationData {
  const MatrixModel* model = nullptr;
  Mat B;  // dim x dim operator on the model's algebra
};

using WordLetters = std::vector<Vec>;

WordLetters random_word(const FactorizationData& fd, Rng& rng, int letters);

Mat word_Fminus(const FactorizationData& fd, const WordLetters& w);
Mat word_Fplus(const FactorizationData& fd, const WordLetters& w);
Mat word_J(const FactorizationData& fd, const WordLetters& w);

/// The same word folded in the matrix semidirect square: returns
/// (group part, cocycle part) = (F-, J).
std::pair<Mat, Mat> word_semidirect(const FactorizationData& fd,
                                    const WordLetters& w);

/// Max over random words of the distance between the two J routes.
double j_graph_residual(const FactorizationData& fd, Rng& rng, int words,
                        int letters_per_word);

/// d/dt log J(exp of one letter t*u) at t = 0 equals u.
double j_tangent_residual(const FactorizationData& fd, double step = kFdStep);

/// Searches for a word whose J value is `target`, spending at most `budget`
/// objective evaluations over words of `letters` letters.
ProbeOutcome j_inverse_probe(const FactorizationData& fd, const Mat& target,
                             int letters, long budget, Rng& rng,
                             double stop_below = 1e-9);

// --- Upsilon on the catalog coordinate groups --------------------------------

struct GWord {
  std::vector<Vec> letters;  // each of size dim H
};

GWord random_gword(CatalogCase c, Rng& rng, int letters);

/// Product of sexp(B u_i, u_i); lies on the subgroup D.
SemiElement xi2(CatalogCase c, const CatalogParams& p, const GWord& w);

/// One-letter word whose Xi2 value has the given second component.
/// Throws DomainError if the letter solve degenerates.
Vec letter_for_target(CatalogCase c, const CatalogParams& p,
                      const GroupElement& k_target);

SemiElement upsilon(CatalogCase c, const CatalogParams& p,
                    const GroupElement& g, const GWord& w);

struct UpsilonFactorization {
  GroupElement g;
  GWord word;
  double residual = 0.0;
};

/// Splits a semidirect element as Xi1(g) Xi2(word) (closed form).
UpsilonFactorization upsilon_invert(CatalogCase c, const CatalogParams& p,
                                    const SemiElement& target);

// --- commuting squares --------------------------------------------------------

struct GammaSquare {
  GWord h2;
  GroupElement a2;
  GroupElement a1;
  GWord h1;
};

/// sdist(Xi2(h2) Xi1(a1), Xi1(a2) Xi2(h1)).
double gamma_invariant_residual(CatalogCase c, const CatalogParams& p,
                                const GammaSquare& s);

/// Builds squares with prescribed sides (closed forms).
GammaSquare square_from_a2_h1(CatalogCase c, const CatalogParams& p,
                              const GroupElement& a2, const GWord& h1);
GammaSquare square_from_h2_a1(CatalogCase c, const CatalogParams& p,
                              const GWord& h2, const GroupElement& a1);
GammaSquare square_from_h2_a2(CatalogCase c, const CatalogParams& p,
                              const GWord& h2, const GroupElement& a2);

/// Horizontal composition; requires h1(x) = h2(y) letterwise (tol 1e-9).
GammaSquare gamma_mul_h(CatalogCase c, const GammaSquare& x,
                        const GammaSquare& y);
/// Vertical composition; requires a1(x) = a2(y) (tol 1e-9).
GammaSquare gamma_mul_v(CatalogCase c, const GammaSquare& x,
                        const GammaSquare& y);

/// Builds a 2x2 grid of squares, composes it in both orders, and returns the
/// worst of: the invariant residuals of all constituent and composite
/// squares, and the side distances between the two evaluation orders.
double gamma_interchange_residual(CatalogCase c, const CatalogParams& p,
                                  Rng& rng);

}  // namespace rbv
