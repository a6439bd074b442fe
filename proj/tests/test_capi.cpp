#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "rbverify.h"

namespace {

struct Options {
  rbv_options* o;
  explicit Options(const char* cmd) : o(rbv_options_create(cmd)) {}
  ~Options() { rbv_options_free(o); }
};

struct ReportHandle {
  rbv_report* r = nullptr;
  ~ReportHandle() { rbv_report_free(r); }
};

}  // namespace

TEST_CASE("version and error-state basics") {
  REQUIRE(rbv_version() != nullptr);
  CHECK(std::string(rbv_version()) == "1.0.0");
  REQUIRE(rbv_last_error() != nullptr);
}

TEST_CASE("option setters accept their documented keys only") {
  Options o("check-rb");
  REQUIRE(o.o != nullptr);
  CHECK(rbv_options_set_u64(o.o, "seed", 7) == RBV_OK);
  CHECK(rbv_options_set_i64(o.o, "samples", 10) == RBV_OK);
  CHECK(rbv_options_set_i64(o.o, "budget", 1000) == RBV_OK);
  CHECK(rbv_options_set_f64(o.o, "tol", 1e-9) == RBV_OK);
  CHECK(rbv_options_set_f64(o.o, "lambda", 2.0) == RBV_OK);
  CHECK(rbv_options_set_f64(o.o, "mu", 3.0) == RBV_OK);
  CHECK(rbv_options_set_f64(o.o, "m", 0.0) == RBV_OK);
  CHECK(rbv_options_set_f64(o.o, "k", 1.0) == RBV_OK);
  CHECK(rbv_options_set_str(o.o, "format", "json") == RBV_OK);
  CHECK(rbv_options_set_str(o.o, "case", "1.1") == RBV_OK);
  CHECK(rbv_options_set_str(o.o, "group", "sl2") == RBV_OK);

  CHECK(rbv_options_set_u64(o.o, "bogus", 1) == RBV_ERR_ARGUMENT);
  CHECK(std::strlen(rbv_last_error()) > 0);
  CHECK(rbv_options_set_f64(o.o, "seed", 1.0) == RBV_ERR_ARGUMENT);
  CHECK(rbv_options_set_str(o.o, "tol", "tiny") == RBV_ERR_ARGUMENT);
  CHECK(rbv_options_set_str(nullptr, "tol", "x") == RBV_ERR_ARGUMENT);
  CHECK(rbv_options_set_str(o.o, nullptr, "x") == RBV_ERR_ARGUMENT);
}

TEST_CASE("a default check run passes and exposes its records") {
  Options o("check-rb");
  rbv_options_set_u64(o.o, "seed", 42);
  ReportHandle rep;
  REQUIRE(rbv_run(o.o, &rep.r) == RBV_OK);
  CHECK(rbv_report_all_pass(rep.r) == 1);
  const int n = rbv_report_check_count(rep.r);
  REQUIRE(n == 2);
  for (int i = 0; i < n; ++i) {
    CHECK(rbv_report_check_name(rep.r, i) != nullptr);
    CHECK(std::strlen(rbv_report_check_anchor(rep.r, i)) > 0);
    double residual = -1.0, tol = -1.0;
    CHECK(rbv_report_check_residual(rep.r, i, &residual) == RBV_OK);
    CHECK(rbv_report_check_tolerance(rep.r, i, &tol) == RBV_OK);
    CHECK(residual <= tol);
    CHECK(rbv_report_check_pass(rep.r, i) == 1);
  }

  char* json = nullptr;
  REQUIRE(rbv_report_render(rep.r, "json", &json) == RBV_OK);
  REQUIRE(json != nullptr);
  CHECK(std::string(json).find("\"all_pass\": true") != std::string::npos);
  rbv_string_free(json);

  char* text = nullptr;
  REQUIRE(rbv_report_render(rep.r, "text", &text) == RBV_OK);
  CHECK(std::string(text).find("all_pass true") != std::string::npos);
  rbv_string_free(text);

  CHECK(rbv_report_render(rep.r, "yaml", &json) == RBV_ERR_ARGUMENT);
}

TEST_CASE("failing checks are reported, not turned into run errors") {
  Options o("check-rb");
  rbv_options_set_str(o.o, "operator_text", "1 0\n0 1\n");
  ReportHandle rep;
  REQUIRE(rbv_run(o.o, &rep.r) == RBV_OK);
  CHECK(rbv_report_all_pass(rep.r) == 0);
  bool saw_fail = false;
  for (int i = 0; i < rbv_report_check_count(rep.r); ++i) {
    if (rbv_report_check_pass(rep.r, i) == 0) saw_fail = true;
  }
  CHECK(saw_fail);
}

TEST_CASE("run errors carry a typed status and a message") {
  Options bad_cmd("no-such-command");
  ReportHandle rep;
  CHECK(rbv_run(bad_cmd.o, &rep.r) == RBV_ERR_ARGUMENT);
  CHECK(rep.r == nullptr);

  Options parse("check-rb");
  rbv_options_set_str(parse.o, "algebra_text", "dim 2\nbracket what\n");
  CHECK(rbv_run(parse.o, &rep.r) == RBV_ERR_PARSE);
  CHECK(std::string(rbv_last_error()).find("line") != std::string::npos);

  // The non-integrable catalog case has no group operator to factor through.
  Options dom("membership");
  rbv_options_set_str(dom.o, "case", "3");
  const rbv_status st = rbv_run(dom.o, &rep.r);
  CHECK(st == RBV_ERR_DOMAIN);

  CHECK(rbv_run(nullptr, &rep.r) == RBV_ERR_ARGUMENT);
  Options ok("kappa");
  CHECK(rbv_run(ok.o, nullptr) == RBV_ERR_ARGUMENT);
}

TEST_CASE("direct helpers work on raw arrays") {
  const double family1[4] = {2.0, 0.0, 3.0, 0.0};
  double residual = -1.0;
  REQUIRE(rbv_rb_residual_2d(family1, &residual) == RBV_OK);
  CHECK(residual == 0.0);

  const double identity[4] = {1.0, 0.0, 0.0, 1.0};
  REQUIRE(rbv_rb_residual_2d(identity, &residual) == RBV_OK);
  CHECK(residual == 4.0);

  int family = -1;
  double p1 = 0.0, p2 = 0.0;
  REQUIRE(rbv_classify_rb_2d(family1, 1e-9, &family, &p1, &p2) == RBV_OK);
  CHECK(family == 1);
  CHECK(p1 == 2.0);
  CHECK(p2 == 3.0);

  const double family2[4] = {2.0, 0.0, 3.0, -1.0};
  REQUIRE(rbv_classify_rb_2d(family2, 1e-9, &family, &p1, &p2) == RBV_OK);
  CHECK(family == 2);

  const double family3[4] = {-2.0, 2.0, -1.0, 1.0};
  REQUIRE(rbv_classify_rb_2d(family3, 1e-9, &family, &p1, &p2) == RBV_OK);
  CHECK(family == 3);
  CHECK(p1 == 1.0);
  CHECK(p2 == 2.0);

  REQUIRE(rbv_classify_rb_2d(identity, 1e-9, &family, &p1, &p2) == RBV_OK);
  CHECK(family == 0);

  double jacobi = -1.0;
  REQUIRE(rbv_algebra_check("dim 2\nbracket 1 2 2 2\n", &jacobi) == RBV_OK);
  CHECK(jacobi == 0.0);
  CHECK(rbv_algebra_check("dim 2\nbad\n", &jacobi) == RBV_ERR_PARSE);
  CHECK(rbv_algebra_check(nullptr, &jacobi) == RBV_ERR_ARGUMENT);
  CHECK(rbv_rb_residual_2d(nullptr, &residual) == RBV_ERR_ARGUMENT);
  CHECK(rbv_rb_residual_2d(family1, nullptr) == RBV_ERR_ARGUMENT);
}

TEST_CASE("report accessors are safe on bad indices and null handles") {
  Options o("kappa");
  ReportHandle rep;
  REQUIRE(rbv_run(o.o, &rep.r) == RBV_OK);
  const int n = rbv_report_check_count(rep.r);
  CHECK(rbv_report_check_name(rep.r, -1) == nullptr);
  CHECK(rbv_report_check_name(rep.r, n) == nullptr);
  CHECK(rbv_report_check_pass(rep.r, n) == -1);
  double out = 0.0;
  CHECK(rbv_report_check_residual(rep.r, n, &out) == RBV_ERR_ARGUMENT);
  CHECK(rbv_report_check_residual(rep.r, 0, nullptr) == RBV_ERR_ARGUMENT);

  CHECK(rbv_report_all_pass(nullptr) == 0);
  CHECK(rbv_report_check_count(nullptr) == 0);
  CHECK(rbv_report_check_name(nullptr, 0) == nullptr);
  CHECK(rbv_report_check_pass(nullptr, 0) == -1);
  rbv_report_free(nullptr);
  rbv_options_free(nullptr);
  rbv_string_free(nullptr);
}
