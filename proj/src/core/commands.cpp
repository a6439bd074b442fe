#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "bialgebra.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "formats.hpp"
#include "rota_baxter.hpp"

namespace rbv {

const char* tool_version() { return "1.0.0"; }

namespace {

double tol_or(const CommandOptions& o, double fallback) {
  return o.tol >= 0.0 ? o.tol : fallback;
}

int samples_or(const CommandOptions& o, int fallback) {
  return o.samples > 0 ? static_cast<int>(o.samples) : fallback;
}

const char* case_anchor(CatalogCase c) {
  return c == CatalogCase::HEIS ? "Example 4.2" : "Example 4.3";
}

/// Canonical algebra matching a square operator, when none was given.
LieAlgebra default_algebra_for(const Mat& b) {
  if (b.rows() == 3) return heisenberg_3d();
  if (b.rows() == 2) return nonabelian_2d();
  throw DimensionError("no default algebra of dimension " +
                       std::to_string(b.rows()) +
                       "; pass one with --algebra");
}

struct Resolved {
  LieAlgebra alg;
  Mat B;
};

Resolved resolve_algebra_operator(const CommandOptions& opt) {
  if (!opt.operator_text.empty()) {
    Mat b = parse_operator(opt.operator_text);
    if (b.rows() != b.cols()) {
      throw DimensionError("operator must be square for the adjoint action");
    }
    LieAlgebra alg = opt.algebra_text.empty() ? default_algebra_for(b)
                                              : parse_algebra(opt.algebra_text);
    if (alg.dim() != b.rows()) {
      throw DimensionError("operator size does not match the algebra");
    }
    return Resolved{alg, b};
  }
  const CatalogCase c =
      opt.case_id.empty() ? CatalogCase::C11 : parse_case(opt.case_id);
  const Mat b = case_operator(c, opt.params);
  if (!opt.algebra_text.empty()) {
    LieAlgebra alg = parse_algebra(opt.algebra_text);
    if (alg.dim() != b.rows()) {
      throw DimensionError("catalog operator does not match the algebra");
    }
    return Resolved{alg, b};
  }
  return Resolved{default_algebra_for(b), b};
}

std::vector<CatalogCase> resolve_cases(const CommandOptions& opt,
                                       bool need_integrable) {
  if (!opt.case_id.empty()) {
    const CatalogCase c = parse_case(opt.case_id);
    if (need_integrable && !case_integrable(c)) {
      throw DomainError("case 3 has no group-level operator; this command "
                        "needs an integrable case");
    }
    validate_params(c, opt.params);
    return {c};
  }
  return integrable_cases();
}

const char* family_slug(Family2D f) {
  switch (f) {
    case Family2D::Family1: return "f1";
    case Family2D::Family2: return "f2";
    case Family2D::Family3: return "f3";
    default: return "none";
  }
}

Mat c11_integer_operator() {
  CatalogParams p;  // lambda = 2, mu = 3
  return case_operator(CatalogCase::C11, p);
}

// --- simple algebra-level commands -------------------------------------------

void cmd_check_rb(const CommandOptions& opt, Report& rep) {
  const Resolved in = resolve_algebra_operator(opt);
  rep.add("input.jacobi_residual", "§2", in.alg.jacobi_residual(), 1e-9);
  const RelativeRBData data{adjoint_action(in.alg), in.B};
  rep.add("rb_residual", "Def 2.1", rb_residual(data), tol_or(opt, 1e-12));
}

void cmd_classify2d(const CommandOptions& opt, Report& rep) {
  const Resolved in = resolve_algebra_operator(opt);
  if (in.B.rows() != 2) {
    throw DimensionError("classify2d needs a 2x2 operator");
  }
  const double tol = tol_or(opt, 1e-9);
  const RelativeRBData data{adjoint_action(nonabelian_2d()), in.B};
  const double resid = rb_residual(data);
  rep.add("classify.rb_residual", "Def 2.1", resid, tol);
  const Classification2D cl = classify_rb_2d(in.B, tol);
  if (cl.family == Family2D::NotRB) {
    rep.add("classify.family.none", "Example 4.3", 0.0, 0.0);
    return;
  }
  const Mat rebuilt = family_operator_2d(cl.family, cl.p1, cl.p2);
  // The third family rebuilds one entry from the trace/determinant
  // relations, so its roundtrip degrades as p2 shrinks.
  const double scale =
      cl.family == Family2D::Family3
          ? 1.0 + (1.0 + std::abs(cl.p1)) * (1.0 + std::abs(cl.p1)) /
                      std::max(std::abs(cl.p2), 1e-12)
          : 1.0;
  rep.add(std::string("classify.family.") + family_slug(cl.family),
          "Example 4.3", max_abs(Mat(rebuilt - in.B)), tol * scale);
}

void cmd_graph(const CommandOptions& opt, Report& rep) {
  const Resolved in = resolve_algebra_operator(opt);
  const RelativeRBData data{adjoint_action(in.alg), in.B};
  const GraphResult gr = graph_subalgebra(data);
  const double rb = rb_residual(data);
  rep.add("graph.closure_residual", "Prop 2.6", gr.closure_residual,
          tol_or(opt, 1e-12));
  rep.add("graph.matches_rb_residual", "Prop 2.6",
          std::abs(gr.closure_residual - rb), 1e-12);
  rep.add("graph.induced_jacobi", "§2", gr.induced.jacobi_residual(), 1e-10);
}

void cmd_matched_pair(const CommandOptions& opt, Report& rep) {
  const Resolved in = resolve_algebra_operator(opt);
  const RelativeRBData data{adjoint_action(in.alg), in.B};
  const MatchedPair mp = matched_pair_from_rb(data);
  rep.add("matched_pair.compatibility_residual", "Def 2.11",
          matched_pair_residual(mp), tol_or(opt, 1e-12));
  rep.add("matched_pair.representation_residual", "Def 2.11",
          matched_pair_representation_residual(mp), 1e-12);
  rep.add("matched_pair.double_bracket_jacobi", "Prop 2.12",
          double_bracket(mp).jacobi_residual(), 1e-12);
}

void cmd_kappa(const CommandOptions& opt, Report& rep) {
  const Resolved in = resolve_algebra_operator(opt);
  const RelativeRBData data{adjoint_action(in.alg), in.B};
  rep.add("kappa.hom_residual", "Prop 2.16", kappa_residual(data),
          tol_or(opt, 1e-12));
}

// --- catalog-level commands ---------------------------------------------------

void cmd_verify_catalog(const CommandOptions& opt, Report& rep) {
  std::vector<CatalogCase> cases = resolve_cases(opt, false);
  const int pairs = samples_or(opt, 200);
  for (CatalogCase c : cases) {
    if (!case_integrable(c)) {
      // Only the subgroup checks make sense for the non-integrable case.
      CatalogParams p = opt.params;
      Rng rng = Rng(opt.seed).for_label(std::string("catalog/") + case_id(c));
      rep.add(std::string("catalog.") + case_id(c) + ".chart_closure",
              case_anchor(c), d_chart_closure_residual(c, p, rng, 100),
              1e-9);
      const ChartTangent ct = d_chart_tangent(c, p);
      rep.add(std::string("catalog.") + case_id(c) + ".chart_tangent_graph",
              "Prop 2.7", ct.graph_residual, 1e-6);
      rep.add_margin(std::string("catalog.") + case_id(c) +
                         ".chart_tangent_span",
                     "Prop 2.7", 1e-3, ct.span_sigma_min);
      continue;
    }
    Rng rng = Rng(opt.seed).for_label(std::string("catalog/") + case_id(c));
    const int draws = c == CatalogCase::HEIS ? 1 : 20;
    double worst_rb = 0.0, worst_tan = 0.0;
    for (int d = 0; d < draws; ++d) {
      const CatalogParams p = d == 0 ? opt.params : random_params(c, rng);
      if (d == 0) validate_params(c, p);
      worst_rb = std::max(worst_rb, group_rb_residual(c, p, rng, pairs));
      worst_tan = std::max(worst_tan, tangent_matches_algebra(c, p));
    }
    const std::string prefix = std::string("catalog.") + case_id(c);
    rep.add(prefix + ".group_rb_residual", "Def 2.3", worst_rb,
            tol_or(opt, 1e-9));
    rep.add(prefix + ".tangent_matches_algebra", "Thm 2.4", worst_tan, 1e-6);
    rep.add(prefix + ".chart_base", case_anchor(c),
            d_chart_base_residual(c, opt.params, rng, 100), 1e-9);
    rep.add(prefix + ".chart_closure", case_anchor(c),
            d_chart_closure_residual(c, opt.params, rng, 100), 1e-9);
    const ChartTangent ct = d_chart_tangent(c, opt.params);
    rep.add(prefix + ".chart_tangent_graph", "Prop 2.7", ct.graph_residual,
            1e-6);
    rep.add_margin(prefix + ".chart_tangent_span", "Prop 2.7", 1e-3,
                   ct.span_sigma_min);
  }
}

void cmd_membership(const CommandOptions& opt, Report& rep) {
  for (CatalogCase c : resolve_cases(opt, true)) {
    Rng rng = Rng(opt.seed).for_label(std::string("membership/") + case_id(c));
    rep.add(std::string("membership.") + case_id(c) + ".residual", "Thm 2.9",
            membership_residual(c, opt.params, rng, samples_or(opt, 500)),
            tol_or(opt, 1e-12));
  }
}

void obstruction_checks(Report& rep, const std::string& prefix,
                        const char* anchor, double m, double k, long budget,
                        int targets, double in_image_tol, uint64_t seed) {
  Rng rng = Rng(seed).for_label(prefix);
  double min_excluded = 1e300;
  for (int i = 0; i < targets; ++i) {
    const double z =
        targets == 1 ? 0.5 : 0.5 + 1.5 * static_cast<double>(i) / (targets - 1);
    const SemiElement t = case3_excluded_target(m, k, z, rng);
    min_excluded = std::min(
        min_excluded, obstruction_probe(m, k, t, budget, rng, 0.045).residual);
  }
  rep.add_margin(prefix + ".excluded_separation", anchor, 0.05, min_excluded);

  double worst_in = 0.0;
  for (int i = 0; i < targets; ++i) {
    const SemiElement t = case3_in_image_target(m, k, rng);
    worst_in = std::max(
        worst_in,
        obstruction_probe(m, k, t, budget, rng, in_image_tol * 0.25).residual);
  }
  rep.add(prefix + ".in_image_residual", anchor, worst_in, in_image_tol);
}

void cmd_obstruction(const CommandOptions& opt, Report& rep) {
  CatalogParams p = opt.params;
  validate_params(CatalogCase::C3, p);
  obstruction_checks(rep, "obstruction", "Example 4.3", p.m, p.k, opt.budget,
                     samples_or(opt, 20), tol_or(opt, 1e-6), opt.seed);
}

// --- word-level commands -------------------------------------------------------

struct ModelSetup {
  const MatrixModel* model;
  LieAlgebra alg;
  Mat B;
  std::string label;
};

ModelSetup resolve_model(const CommandOptions& opt) {
  const std::string name = opt.group.empty() ? "sl2" : opt.group;
  if (name == "ut2") {
    Mat b = opt.operator_text.empty() ? c11_integer_operator()
                                      : parse_operator(opt.operator_text);
    return ModelSetup{&model_ut2(), nonabelian_2d(), b, "ut2"};
  }
  if (name == "heis3") {
    CatalogParams p;
    Mat b = opt.operator_text.empty() ? case_operator(CatalogCase::HEIS, p)
                                      : parse_operator(opt.operator_text);
    return ModelSetup{&model_heis3(), heisenberg_3d(), b, "heis3"};
  }
  if (name == "sl2") {
    Mat b = opt.operator_text.empty()
                ? derived_rb_operator(sl2_standard_rmatrix())
                : parse_operator(opt.operator_text);
    return ModelSetup{&model_sl2(), sl2(), b, "sl2"};
  }
  throw ArgumentError("unknown group '" + name +
                      "' (expected ut2, heis3, or sl2)");
}

void jprobe_checks(Report& rep, const std::string& prefix, const char* anchor,
                   const ModelSetup& ms, Rng& rng, int words, int targets,
                   long budget, double graph_tol, double inverse_tol,
                   double fpm_tol) {
  if (ms.B.rows() != ms.model->dim || ms.B.cols() != ms.model->dim) {
    throw DimensionError("operator size does not match the model");
  }
  rep.add(prefix + ".model_consistency", "§2.1",
          model_consistency_residual(*ms.model, ms.alg, rng, 50), 1e-10);
  rep.add(prefix + ".fpm_hom_residual", "§2.3", fpm_hom_residual(ms.alg, ms.B),
          fpm_tol);
  const FactorizationData fd{ms.model, ms.B};
  rep.add(prefix + ".j_graph_residual", anchor,
          j_graph_residual(fd, rng, words, 3), graph_tol);
  rep.add(prefix + ".j_tangent_residual", anchor, j_tangent_residual(fd),
          1e-6);
  double worst = 0.0;
  const long per_target = std::max<long>(budget / std::max(targets, 1), 2000);
  for (int i = 0; i < targets; ++i) {
    const Mat target = model_exp(*ms.model, rng.vec(ms.model->dim, -0.3, 0.3));
    worst = std::max(worst, j_inverse_probe(fd, target, 1, per_target, rng,
                                            inverse_tol * 0.25)
                                .residual);
  }
  rep.add(prefix + ".j_inverse_max_residual", anchor, worst, inverse_tol);
}

void cmd_jprobe(const CommandOptions& opt, Report& rep) {
  const ModelSetup ms = resolve_model(opt);
  Rng rng = Rng(opt.seed).for_label("jprobe/" + ms.label);
  jprobe_checks(rep, "jprobe." + ms.label, "Thm 2.26", ms, rng,
                samples_or(opt, 100), 20, opt.budget, tol_or(opt, 1e-10),
                1e-6, 1e-12);
}

void cmd_upsilon(const CommandOptions& opt, Report& rep) {
  for (CatalogCase c : resolve_cases(opt, true)) {
    Rng rng = Rng(opt.seed).for_label(std::string("upsilon/") + case_id(c));
    const GroupId gid = case_group(c);
    const GroupElement e = gidentity(gid);
    double worst_g = 0.0, worst_f = 0.0;
    for (int i = 0; i < 5; ++i) {
      const GroupElement g = random_element(gid, rng);
      worst_g = std::max(
          worst_g, sdist(upsilon(c, opt.params, g, GWord{}),
                         SemiElement{g, e}));
      const GWord w = random_gword(c, rng, 1 + static_cast<int>(i % 2));
      worst_f = std::max(worst_f, sdist(upsilon(c, opt.params, e, w),
                                        xi2(c, opt.params, w)));
    }
    const std::string prefix = std::string("upsilon.") + case_id(c);
    rep.add(prefix + ".identity_group_factor", "Prop 2.21", worst_g, 0.0);
    rep.add(prefix + ".identity_word_factor", "Prop 2.21", worst_f, 0.0);
    double worst_inv = 0.0;
    for (int i = 0; i < samples_or(opt, 20); ++i) {
      const SemiElement target{random_element(gid, rng),
                               random_element(gid, rng)};
      worst_inv =
          std::max(worst_inv, upsilon_invert(c, opt.params, target).residual);
    }
    rep.add(prefix + ".inversion_residual", "Prop 2.21", worst_inv,
            tol_or(opt, 1e-8));
  }
}

void cmd_gamma(const CommandOptions& opt, Report& rep) {
  std::vector<CatalogCase> cases;
  if (!opt.case_id.empty()) {
    cases = resolve_cases(opt, true);
  } else {
    cases = {CatalogCase::C11, CatalogCase::HEIS};
  }
  for (CatalogCase c : cases) {
    Rng rng = Rng(opt.seed).for_label(std::string("gamma/") + case_id(c));
    const GroupId gid = case_group(c);
    const std::string prefix = std::string("gamma.") + case_id(c);

    double worst_gen = 0.0;
    for (int i = 0; i < samples_or(opt, 50); ++i) {
      GammaSquare s;
      if (i % 3 == 0) {
        s = square_from_a2_h1(c, opt.params, random_element(gid, rng),
                              random_gword(c, rng, 1));
      } else if (i % 3 == 1) {
        s = square_from_h2_a1(c, opt.params, random_gword(c, rng, 1),
                              random_element(gid, rng));
      } else {
        s = square_from_h2_a2(c, opt.params, random_gword(c, rng, 1),
                              random_element(gid, rng));
      }
      worst_gen =
          std::max(worst_gen, gamma_invariant_residual(c, opt.params, s));
    }
    rep.add(prefix + ".generator_invariant", "§2.2", worst_gen,
            tol_or(opt, 1e-10));

    double worst_closure = 0.0;
    for (int i = 0; i < 10; ++i) {
      const GammaSquare x = square_from_a2_h1(
          c, opt.params, random_element(gid, rng), random_gword(c, rng, 1));
      const GammaSquare yh =
          square_from_h2_a1(c, opt.params, x.h1, random_element(gid, rng));
      worst_closure = std::max(
          worst_closure,
          gamma_invariant_residual(c, opt.params, gamma_mul_h(c, x, yh)));
      const GammaSquare yv =
          square_from_a2_h1(c, opt.params, x.a1, random_gword(c, rng, 1));
      worst_closure = std::max(
          worst_closure,
          gamma_invariant_residual(c, opt.params, gamma_mul_v(c, x, yv)));
    }
    rep.add(prefix + ".closure_residual", "§2.2", worst_closure, 1e-9);

    double worst_inter = 0.0;
    const int grids = std::max(1, samples_or(opt, 100) / 4);
    for (int i = 0; i < grids; ++i) {
      worst_inter = std::max(worst_inter,
                             gamma_interchange_residual(c, opt.params, rng));
    }
    rep.add(prefix + ".interchange_residual", "§2.2", worst_inter, 1e-9);
  }
}

// --- bialgebra / poisson -------------------------------------------------------

void cmd_bialgebra(const CommandOptions& opt, Report& rep) {
  const bool standard = opt.rmatrix_text.empty();
  RMatrix rm = standard
                   ? sl2_standard_rmatrix()
                   : make_rmatrix(opt.algebra_text.empty()
                                      ? sl2()
                                      : parse_algebra(opt.algebra_text),
                                  parse_rmatrix(opt.rmatrix_text));
  rep.add("bialgebra.cybe_residual", "§3", cybe_residual(rm),
          tol_or(opt, 1e-12));
  rep.add("bialgebra.invariance_residual", "§3", invariance_residual(rm),
          1e-12);
  rep.add("bialgebra.I_equals_2s", "§3",
          max_abs(Mat(big_I(rm) - 2.0 * symmetric_part(rm))), 0.0);
  rep.add("bialgebra.factorizable", "Def 3.3",
          is_factorizable(rm) ? 0.0 : 1.0, 0.0);
  const LieAlgebra dual = dual_algebra(rm);
  rep.add("bialgebra.dual_jacobi", "§3", dual.jacobi_residual(), 1e-10);
  rep.add("bialgebra.rpm_hom_residual", "§3", rpm_hom_residual(rm), 1e-10);
  rep.add("bialgebra.ihat_graph_residual", "Thm 3.4", ihat_graph_residual(rm),
          1e-12);
  const Mat B = derived_rb_operator(rm);
  const RelativeRBData data{adjoint_action(rm.alg), B};
  rep.add("bialgebra.derived_rb_residual", "Thm 3.4", rb_residual(data),
          1e-10);
  double scale_dev = 0.0;
  for (double t : {2.0, 0.5, -1.0}) {
    const Mat bt = derived_rb_operator(make_rmatrix(rm.alg, Mat(t * rm.r)));
    scale_dev = std::max(scale_dev, max_abs(Mat(bt - B)));
  }
  rep.add("bialgebra.derived_scale_invariance", "Thm 3.4", scale_dev, 1e-12);

  if (!standard) return;

  // Frozen values for the standard sl2 r-matrix.
  Mat I_frozen = Mat::Zero(3, 3);
  I_frozen(0, 0) = 0.5;
  I_frozen(1, 2) = 1.0;
  I_frozen(2, 1) = 1.0;
  rep.add("bialgebra.sl2_I_frozen", "§3", max_abs(Mat(big_I(rm) - I_frozen)),
          0.0);
  Mat B_frozen = Mat::Zero(3, 3);
  B_frozen(0, 0) = -0.5;
  B_frozen(1, 1) = -1.0;
  rep.add("bialgebra.sl2_derived_frozen", "Thm 3.4",
          max_abs(Mat(B - B_frozen)), 0.0);
  double dual_dev = 0.0;
  for (int c = 0; c < 3; ++c) {
    dual_dev = std::max(dual_dev,
                        std::abs(dual.c(0, 1, c) - (c == 1 ? -0.5 : 0.0)));
    dual_dev = std::max(dual_dev,
                        std::abs(dual.c(0, 2, c) - (c == 2 ? -0.5 : 0.0)));
    dual_dev = std::max(dual_dev, std::abs(dual.c(1, 2, c)));
  }
  rep.add("bialgebra.sl2_dual_frozen", "§3", dual_dev, 0.0);

  // Invariance-preserving perturbations (antisymmetric) must still yield a
  // dual bracket; invariance-breaking ones (symmetric, Killing part
  // removed) must be rejected.
  Rng rng = Rng(opt.seed).for_label("bialgebra/perturbations");
  const Mat kappa = big_I(rm);
  int wrong = 0;
  for (int i = 0; i < 50; ++i) {
    const Mat raw = rng.mat(3, 3, -0.1, 0.1);
    if (i % 2 == 0) {
      const Mat anti = 0.5 * (raw - raw.transpose());
      try {
        (void)dual_algebra(make_rmatrix(rm.alg, Mat(rm.r + anti)));
      } catch (const PreconditionError&) {
        ++wrong;
      }
    } else {
      Mat sym = 0.5 * (raw + raw.transpose());
      const double proj = (sym.array() * kappa.array()).sum() /
                          (kappa.array() * kappa.array()).sum();
      sym -= proj * kappa;
      try {
        (void)dual_algebra(make_rmatrix(rm.alg, Mat(rm.r + sym)));
        ++wrong;
      } catch (const PreconditionError&) {
      }
    }
  }
  rep.add("bialgebra.perturbation_classification", "§3",
          static_cast<double>(wrong), 0.0);

  // The derived operator feeds the same word-level factorization maps.
  Rng jr = Rng(opt.seed).for_label("bialgebra/jlink");
  const FactorizationData fd{&model_sl2(), B};
  rep.add("bialgebra.sl2_j_graph_residual", "Thm 3.7",
          j_graph_residual(fd, jr, 50, 3), 1e-10);
  rep.add("bialgebra.sl2_j_tangent_residual", "Thm 3.7",
          j_tangent_residual(fd), 1e-6);
  double worst_inv = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Mat target = model_exp(model_sl2(), jr.vec(3, -0.3, 0.3));
    worst_inv = std::max(
        worst_inv,
        j_inverse_probe(fd, target, 1, std::max<long>(opt.budget / 20, 2000),
                        jr, 2.5e-7)
            .residual);
  }
  rep.add("bialgebra.sl2_j_inverse_max_residual", "Thm 3.7", worst_inv, 1e-6);
}

void cmd_poisson(const CommandOptions& opt, Report& rep) {
  struct Entry {
    const MatrixModel* model;
    RMatrix rm;
    std::string label;
  };
  std::vector<Entry> entries;
  if (!opt.rmatrix_text.empty()) {
    const ModelSetup ms = resolve_model(opt);
    entries.push_back(
        Entry{ms.model, make_rmatrix(ms.alg, parse_rmatrix(opt.rmatrix_text)),
              ms.label});
  } else {
    Mat r2 = Mat::Zero(2, 2);
    r2(0, 1) = 1.0;
    r2(1, 0) = -1.0;
    Mat r3 = Mat::Zero(3, 3);
    r3(0, 1) = 1.0;
    r3(1, 0) = -1.0;
    entries.push_back(
        Entry{&model_ut2(), make_rmatrix(nonabelian_2d(), r2), "ut2"});
    entries.push_back(
        Entry{&model_heis3(), make_rmatrix(heisenberg_3d(), r3), "heis3"});
    entries.push_back(Entry{&model_sl2(), sl2_standard_rmatrix(), "sl2"});
    if (!opt.group.empty()) {
      std::vector<Entry> filtered;
      for (Entry& e : entries) {
        if (e.label == opt.group) filtered.push_back(e);
      }
      if (filtered.empty()) {
        throw ArgumentError("unknown group '" + opt.group + "'");
      }
      entries = filtered;
    }
  }
  for (const Entry& e : entries) {
    Rng rng = Rng(opt.seed).for_label("poisson/" + e.label);
    rep.add("poisson." + e.label + ".identity_vanishes", "Def 3.5",
            poisson_identity_residual(*e.model, e.rm), 0.0);
    rep.add("poisson." + e.label + ".multiplicativity", "Def 3.5",
            poisson_multiplicativity_residual(*e.model, e.rm, rng,
                                              samples_or(opt, 100)),
            tol_or(opt, 1e-8));
  }
  if (opt.rmatrix_text.empty() && opt.group.empty()) {
    // Commuting model: the bivector vanishes identically.
    Mat r2 = Mat::Zero(2, 2);
    r2(0, 1) = 1.0;
    r2(1, 0) = -1.0;
    const RMatrix rm = make_rmatrix(abelian(2), r2);
    Rng rng = Rng(opt.seed).for_label("poisson/diag2");
    double worst = poisson_identity_residual(model_diag2(), rm);
    for (int i = 0; i < 10; ++i) {
      const Mat g = model_exp(model_diag2(), rng.vec(2, -1.0, 1.0));
      worst = std::max(worst, max_abs(poisson_bivector(model_diag2(), rm, g)));
    }
    rep.add("poisson.diag2_abelian_vanishes", "Def 3.5", worst, 0.0);
  }
}

// --- suite-only groups ----------------------------------------------------------

void suite_families(const CommandOptions& opt, Report& rep) {
  Rng rng = Rng(opt.seed).for_label("suite/families");
  const LieAlgebra a2 = nonabelian_2d();
  const Family2D fams[3] = {Family2D::Family1, Family2D::Family2,
                            Family2D::Family3};
  for (Family2D f : fams) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double p1 = rng.uniform(-5.0, 5.0);
      const double p2 = f == Family2D::Family3
                            ? (rng.uniform01() < 0.5 ? -1.0 : 1.0) *
                                  rng.uniform(0.1, 5.0)
                            : rng.uniform(-5.0, 5.0);
      const Mat b = family_operator_2d(f, p1, p2);
      worst = std::max(worst, rb_residual(rb_data_2d_adjoint(b)));
    }
    rep.add(std::string("families.") + family_slug(f) + ".rb_residual_max",
            "Example 4.3", worst, 1e-12);
  }

  // Classification sweep: family members (exact and perturbed off-family)
  // and unstructured matrices, checked for agreement between the residual
  // and the classifier, plus oracle agreement and exact roundtrips.
  Rng sweep = Rng(opt.seed).for_label("suite/classification");
  int mismatches = 0;
  double oracle_dev = 0.0, roundtrip = 0.0;
  for (int i = 0; i < 100000; ++i) {
    Mat b(2, 2);
    const int kind = i % 4;
    if (kind == 0 || kind == 1) {
      const Family2D f = fams[static_cast<size_t>(sweep.below(3))];
      double p1 = 0.0;
      do {
        p1 = sweep.uniform(-5.0, 5.0);
      } while ((f == Family2D::Family1 && std::abs(p1 + 1.0) < 0.05) ||
               (f == Family2D::Family2 && std::abs(p1) < 0.05));
      const double p2 = f == Family2D::Family3
                            ? (sweep.uniform01() < 0.5 ? -1.0 : 1.0) *
                                  sweep.uniform(0.1, 5.0)
                            : sweep.uniform(-5.0, 5.0);
      b = family_operator_2d(f, p1, p2);
      if (kind == 1) {
        // Push the operator off the family along a constrained entry.
        if (f == Family2D::Family1 || f == Family2D::Family2) {
          if (sweep.uniform01() < 0.5) {
            b(0, 1) += 1e-5;
          } else {
            b(1, 1) += 1e-5;
          }
        } else {
          b(0, 0) += 1e-5;
        }
      }
    } else {
      b = sweep.mat(2, 2, -2.0, 2.0);
    }
    double e1 = 0.0, e2 = 0.0;
    const double scalar = rb_scalar_equations_2d(b, e1, e2);
    const double general = rb_residual(rb_data_2d_adjoint(b));
    oracle_dev = std::max(oracle_dev, std::abs(scalar - general));
    const Classification2D cl = classify_rb_2d(b, 1e-9);
    const bool is_rb = general <= 1e-9;
    const bool classified = cl.family != Family2D::NotRB;
    if (is_rb != classified) ++mismatches;
    if (classified) {
      roundtrip = std::max(
          roundtrip,
          max_abs(Mat(family_operator_2d(cl.family, cl.p1, cl.p2) - b)));
    }
  }
  rep.add("families.scalar_oracle_agreement", "Def 2.1", oracle_dev, 1e-12);
  rep.add("families.completeness_mismatches", "Example 4.3",
          static_cast<double>(mismatches), 0.0);
  rep.add("families.roundtrip_max", "Example 4.3", roundtrip, 0.0);
}

void suite_exact_zero(const CommandOptions& opt, Report& rep) {
  (void)opt;
  struct ExactCase {
    std::string label;
    LieAlgebra alg;
    Mat B;
  };
  CatalogParams c3p;
  c3p.m = 1.0;
  c3p.k = 2.0;
  CatalogParams heisp;
  std::vector<ExactCase> cases;
  cases.push_back({"c11_int", nonabelian_2d(), c11_integer_operator()});
  cases.push_back(
      {"c3_int", nonabelian_2d(), case_operator(CatalogCase::C3, c3p)});
  cases.push_back(
      {"heis", heisenberg_3d(), case_operator(CatalogCase::HEIS, heisp)});
  for (const ExactCase& ec : cases) {
    const RelativeRBData data{adjoint_action(ec.alg), ec.B};
    const std::string prefix = "exact." + ec.label;
    rep.add(prefix + ".rb_residual", "Def 2.1", rb_residual(data), 0.0);
    rep.add(prefix + ".graph_closure", "Prop 2.6",
            graph_subalgebra(data).closure_residual, 0.0);
    const MatchedPair mp = matched_pair_from_rb(data);
    rep.add(prefix + ".matched_pair_residual", "Prop 2.14",
            matched_pair_residual(mp), 0.0);
    rep.add(prefix + ".representation_residual", "Def 2.11",
            matched_pair_representation_residual(mp), 0.0);
    rep.add(prefix + ".double_bracket_jacobi", "Prop 2.12",
            double_bracket(mp).jacobi_residual(), 0.0);
    rep.add(prefix + ".kappa_hom_residual", "Prop 2.16", kappa_residual(data),
            0.0);
    rep.add(prefix + ".fpm_hom_residual", "§2.3",
            fpm_hom_residual(ec.alg, ec.B), 0.0);
  }

  // Random admissible parameters keep every residual at rounding level.
  Rng rng = Rng(opt.seed).for_label("suite/random-params");
  double worst_mp = 0.0, worst_dbl = 0.0, worst_kappa = 0.0,
         worst_graph = 0.0;
  for (CatalogCase c : all_cases()) {
    const LieAlgebra alg =
        case_group(c) == GroupId::HEIS3 ? heisenberg_3d() : nonabelian_2d();
    for (int d = 0; d < 20; ++d) {
      const CatalogParams p = random_params(c, rng);
      const RelativeRBData data{adjoint_action(alg), case_operator(c, p)};
      const MatchedPair mp = matched_pair_from_rb(data, 1e-9);
      worst_mp = std::max(worst_mp, matched_pair_residual(mp));
      worst_dbl =
          std::max(worst_dbl, double_bracket(mp).jacobi_residual());
      worst_kappa = std::max(worst_kappa, kappa_residual(data));
      worst_graph =
          std::max(worst_graph, graph_subalgebra(data).closure_residual);
    }
  }
  rep.add("random_params.matched_pair_residual", "Def 2.11", worst_mp, 1e-12);
  rep.add("random_params.double_bracket_jacobi", "Prop 2.12", worst_dbl,
          1e-12);
  rep.add("random_params.kappa_hom_residual", "Prop 2.16", worst_kappa,
          1e-12);
  rep.add("random_params.graph_closure", "Prop 2.6", worst_graph, 1e-12);
}

void suite_controls(const CommandOptions& opt, Report& rep) {
  (void)opt;
  const LieAlgebra a2 = nonabelian_2d();

  // A pair with both actions adjoint is not matched for this algebra.
  {
    std::vector<Mat> rho = {a2.ad(unit_vec(2, 0)), a2.ad(unit_vec(2, 1))};
    const MatchedPair bad{a2, a2, rho, rho};
    rep.add_margin("controls.matched_pair_negative_detected", "Prop 2.14",
                   1.0, matched_pair_residual(bad));
  }
  // Perturbing one representation entry must be visible.
  {
    const RelativeRBData data{adjoint_action(a2), c11_integer_operator()};
    MatchedPair mp = matched_pair_from_rb(data);
    mp.mu[0](0, 0) += 0.1;
    rep.add_margin("controls.matched_pair_perturbation_detected", "Def 2.11",
                   0.1, matched_pair_residual(mp));
  }
  // A non-Rota-Baxter operator must fail the defining identity, the graph
  // closure, and the square-embedding homomorphism check.
  {
    const RelativeRBData bad{adjoint_action(a2), Mat::Identity(2, 2)};
    rep.add_margin("controls.rb_negative_detected", "Def 2.1",
                   1.0, rb_residual(bad));
    rep.add_margin("controls.graph_negative_detected", "Prop 2.6", 1.0,
                   graph_subalgebra(bad).closure_residual);
    rep.add_margin("controls.kappa_negative_detected", "Prop 2.16", 1e-1,
                   kappa_residual(bad, 1e9));
  }
  // A small off-family perturbation of an integer operator is detected by
  // the square-embedding check as well.
  {
    Mat b = c11_integer_operator();
    b(0, 1) += 1e-3;
    const RelativeRBData data{adjoint_action(a2), b};
    rep.add_margin("controls.kappa_perturbation_detected", "Prop 2.16", 1e-4,
                   kappa_residual(data, 1e9));
  }
}

void suite_transport(const CommandOptions& opt, Report& rep) {
  const LieAlgebra mixed = nonabelian_2d_mixed();
  const LieAlgebra std2 = nonabelian_2d();
  Mat bm = Mat::Zero(2, 2);
  bm(1, 1) = -1.0;
  rep.add("transport.source_rb_residual", "Example 4.4",
          rb_residual(RelativeRBData{adjoint_action(mixed), bm}), 0.0);

  Mat phi(2, 2);  // standard basis -> mixed basis
  phi << 1.0, -1.0, 0.0, 1.0;
  const LinearOperator t(2, 2, bm);
  const Mat b_std = transport_operator(std2, mixed, t, phi).m;
  Mat expected(2, 2);
  expected << 0.0, -1.0, 0.0, -1.0;
  rep.add("transport.result_exact", "Example 4.4",
          max_abs(Mat(b_std - expected)), 0.0);
  rep.add("transport.target_rb_residual", "Def 2.1",
          rb_residual(RelativeRBData{adjoint_action(std2), b_std}), 0.0);

  const Classification2D cl = classify_rb_2d(b_std, 1e-9);
  const double class_dev = (cl.family == Family2D::Family3 ? 0.0 : 1.0) +
                           std::abs(cl.p1 + 1.0) + std::abs(cl.p2 + 1.0);
  rep.add("transport.classified_family3", "Example 4.4", class_dev, 0.0);

  obstruction_checks(rep, "transport.obstruction", "Example 4.4", cl.p1,
                     cl.p2, opt.budget, 20, 1e-6, opt.seed);
}

void suite_models(const CommandOptions& opt, Report& rep) {
  CatalogParams heisp;
  const std::vector<ModelSetup> setups = {
      {&model_ut2(), nonabelian_2d(), c11_integer_operator(), "ut2"},
      {&model_heis3(), heisenberg_3d(), case_operator(CatalogCase::HEIS, heisp),
       "heis3"},
      {&model_sl2(), sl2(), derived_rb_operator(sl2_standard_rmatrix()),
       "sl2"},
  };
  for (const ModelSetup& ms : setups) {
    Rng rng = Rng(opt.seed).for_label("suite/jprobe/" + ms.label);
    jprobe_checks(rep, "jprobe." + ms.label, "Thm 2.26", ms, rng, 100, 20,
                  opt.budget, 1e-10, 1e-6, 0.0);
  }
  // Coordinate-group and semidirect-square axioms.
  for (GroupId gid : {GroupId::UT2, GroupId::HEIS3}) {
    Rng rng = Rng(opt.seed).for_label(std::string("suite/group/") +
                                      group_name(gid));
    rep.add(std::string("group.") + group_name(gid) + ".axioms",
            gid == GroupId::UT2 ? "Example 4.3" : "Example 4.2",
            group_axioms_residual(gid, rng, 200), 1e-12);
    const LieAlgebra semi = semidirect_algebra(adjoint_action(
        gid == GroupId::UT2 ? nonabelian_2d() : heisenberg_3d()));
    rep.add(std::string("group.") + group_name(gid) + ".semidirect_jacobi",
            "§2.1", semi.jacobi_residual(), 0.0);
    double worst = 0.0;
    const int n = group_dim(gid);
    for (int i = 0; i < 100; ++i) {
      const Vec x = rng.vec(n, -1.0, 1.0), u = rng.vec(n, -1.0, 1.0);
      Vec x2(n), u2(n);
      slog(sexp(gid, x, u), x2, u2);
      worst = std::max(worst, max_abs(Vec(x2 - x)));
      worst = std::max(worst, max_abs(Vec(u2 - u)));
      const SemiElement a{random_element(gid, rng), random_element(gid, rng)};
      const SemiElement b{random_element(gid, rng), random_element(gid, rng)};
      const SemiElement c{random_element(gid, rng), random_element(gid, rng)};
      worst = std::max(worst, sdist(smul(smul(a, b), c), smul(a, smul(b, c))));
      worst = std::max(worst, sdist(smul(a, sinv(a)), sidentity(gid)));
    }
    rep.add(std::string("group.") + group_name(gid) + ".semidirect_axioms",
            "§2.1", worst, 1e-12);
  }
}

void suite_formats(const CommandOptions& opt, Report& rep) {
  (void)opt;
  const LieAlgebra a2 = nonabelian_2d();
  const LieAlgebra back = parse_algebra(format_algebra(a2));
  double dev = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        dev = std::max(dev, std::abs(back.c(i, j, k) - a2.c(i, j, k)));
      }
    }
  }
  rep.add("formats.algebra_roundtrip", "§2", dev, 0.0);

  const Mat b = c11_integer_operator();
  rep.add("formats.operator_roundtrip", "Def 2.1",
          max_abs(Mat(parse_operator(format_operator(b, "c11")) - b)), 0.0);

  const RMatrix rm = sl2_standard_rmatrix();
  rep.add("formats.rmatrix_roundtrip", "§3",
          max_abs(Mat(parse_rmatrix(format_rmatrix(rm.r, "sl2")) - rm.r)),
          0.0);
}

void cmd_suite(const CommandOptions& opt, Report& rep) {
  CommandOptions sub = opt;
  sub.case_id.clear();
  sub.operator_text.clear();
  sub.algebra_text.clear();
  sub.rmatrix_text.clear();
  sub.group.clear();
  sub.params = CatalogParams{};
  sub.tol = -1.0;
  sub.samples = -1;

  suite_families(sub, rep);
  suite_exact_zero(sub, rep);
  suite_controls(sub, rep);
  cmd_verify_catalog(sub, rep);
  {
    CommandOptions c3 = sub;
    c3.case_id = "3";
    cmd_verify_catalog(c3, rep);
  }
  cmd_membership(sub, rep);
  cmd_obstruction(sub, rep);
  suite_transport(sub, rep);
  suite_models(sub, rep);
  cmd_upsilon(sub, rep);
  cmd_gamma(sub, rep);
  cmd_bialgebra(sub, rep);
  cmd_poisson(sub, rep);
  suite_formats(sub, rep);
}

}  // namespace

Report run_command(const CommandOptions& opt) {
  Report rep;
  rep.tool_version = tool_version();
  rep.seed = opt.seed;
  (void)parse_report_format(opt.format);  // validate early

  if (opt.command == "check-rb") {
    cmd_check_rb(opt, rep);
  } else if (opt.command == "classify2d") {
    cmd_classify2d(opt, rep);
  } else if (opt.command == "graph") {
    cmd_graph(opt, rep);
  } else if (opt.command == "matched-pair") {
    cmd_matched_pair(opt, rep);
  } else if (opt.command == "kappa") {
    cmd_kappa(opt, rep);
  } else if (opt.command == "verify-catalog") {
    cmd_verify_catalog(opt, rep);
  } else if (opt.command == "membership") {
    cmd_membership(opt, rep);
  } else if (opt.command == "obstruction") {
    cmd_obstruction(opt, rep);
  } else if (opt.command == "jprobe") {
    cmd_jprobe(opt, rep);
  } else if (opt.command == "upsilon") {
    cmd_upsilon(opt, rep);
  } else if (opt.command == "gamma") {
    cmd_gamma(opt, rep);
  } else if (opt.command == "bialgebra") {
    cmd_bialgebra(opt, rep);
  } else if (opt.command == "poisson") {
    cmd_poisson(opt, rep);
  } else if (opt.command == "suite") {
    cmd_suite(opt, rep);
  } else {
    throw ArgumentError("unknown command '" + opt.command + "'");
  }
  return rep;
}

}  // namespace rbv
