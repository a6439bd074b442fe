#include "rbverify.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/errors.hpp"
#include "core/formats.hpp"
#include "core/report.hpp"
#include "core/rota_baxter.hpp"

using rbv::CommandOptions;
using rbv::Report;

struct rbv_options {
  CommandOptions opt;
};

struct rbv_report {
  Report rep;
};

namespace {

thread_local std::string g_last_error;

rbv_status fail(rbv_status code, const char* what) {
  g_last_error = what != nullptr ? what : "";
  return code;
}

/// Runs `fn` and maps thrown library errors onto status codes.
template <typename Fn>
rbv_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RBV_OK;
  } catch (const rbv::ParseError& e) {
    return fail(RBV_ERR_PARSE, e.what());
  } catch (const rbv::DimensionError& e) {
    return fail(RBV_ERR_DIMENSION, e.what());
  } catch (const rbv::DomainError& e) {
    return fail(RBV_ERR_DOMAIN, e.what());
  } catch (const rbv::SingularError& e) {
    return fail(RBV_ERR_SINGULAR, e.what());
  } catch (const rbv::PreconditionError& e) {
    return fail(RBV_ERR_PRECONDITION, e.what());
  } catch (const rbv::ArgumentError& e) {
    return fail(RBV_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RBV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RBV_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool check_in_range(const rbv_report* r, int i) {
  return r != nullptr && i >= 0 &&
         i < static_cast<int>(r->rep.checks.size());
}

}  // namespace

extern "C" {

const char* rbv_version(void) { return rbv::tool_version(); }

const char* rbv_last_error(void) { return g_last_error.c_str(); }

rbv_options* rbv_options_create(const char* command) {
  try {
    rbv_options* o = new rbv_options;
    o->opt.command = command != nullptr ? command : "";
    return o;
  } catch (...) {
    return nullptr;
  }
}

void rbv_options_free(rbv_options* o) { delete o; }

rbv_status rbv_options_set_u64(rbv_options* o, const char* key,
                               uint64_t value) {
  if (o == nullptr || key == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null options or key");
  }
  const std::string k = key;
  if (k == "seed") {
    o->opt.seed = value;
    return RBV_OK;
  }
  return fail(RBV_ERR_ARGUMENT, "unknown u64 option key");
}

rbv_status rbv_options_set_i64(rbv_options* o, const char* key,
                               int64_t value) {
  if (o == nullptr || key == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null options or key");
  }
  const std::string k = key;
  if (k == "samples") {
    o->opt.samples = value;
    return RBV_OK;
  }
  if (k == "budget") {
    if (value <= 0) return fail(RBV_ERR_ARGUMENT, "budget must be positive");
    o->opt.budget = value;
    return RBV_OK;
  }
  return fail(RBV_ERR_ARGUMENT, "unknown i64 option key");
}

rbv_status rbv_options_set_f64(rbv_options* o, const char* key, double value) {
  if (o == nullptr || key == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null options or key");
  }
  const std::string k = key;
  if (k == "tol") {
    o->opt.tol = value;
  } else if (k == "lambda") {
    o->opt.params.lambda = value;
  } else if (k == "mu") {
    o->opt.params.mu = value;
  } else if (k == "m") {
    o->opt.params.m = value;
  } else if (k == "k") {
    o->opt.params.k = value;
  } else {
    return fail(RBV_ERR_ARGUMENT, "unknown f64 option key");
  }
  return RBV_OK;
}

rbv_status rbv_options_set_str(rbv_options* o, const char* key,
                               const char* value) {
  if (o == nullptr || key == nullptr || value == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null options, key, or value");
  }
  const std::string k = key;
  if (k == "format") {
    o->opt.format = value;
  } else if (k == "case") {
    o->opt.case_id = value;
  } else if (k == "group") {
    o->opt.group = value;
  } else if (k == "algebra_text") {
    o->opt.algebra_text = value;
  } else if (k == "operator_text") {
    o->opt.operator_text = value;
  } else if (k == "rmatrix_text") {
    o->opt.rmatrix_text = value;
  } else {
    return fail(RBV_ERR_ARGUMENT, "unknown string option key");
  }
  return RBV_OK;
}

rbv_status rbv_run(const rbv_options* o, rbv_report** out) {
  if (o == nullptr || out == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null options or output");
  }
  *out = nullptr;
  return guarded([&] {
    rbv_report* r = new rbv_report;
    try {
      r->rep = rbv::run_command(o->opt);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

void rbv_report_free(rbv_report* r) { delete r; }

rbv_status rbv_report_render(const rbv_report* r, const char* format,
                             char** out) {
  if (r == nullptr || format == nullptr || out == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null report, format, or output");
  }
  *out = nullptr;
  return guarded([&] {
    const std::string text =
        rbv::render_report(r->rep, rbv::parse_report_format(format));
    *out = dup_string(text);
    if (*out == nullptr) throw std::bad_alloc();
  });
}

void rbv_string_free(char* s) { std::free(s); }

int rbv_report_all_pass(const rbv_report* r) {
  return r != nullptr && r->rep.all_pass() ? 1 : 0;
}

int rbv_report_check_count(const rbv_report* r) {
  return r == nullptr ? 0 : static_cast<int>(r->rep.checks.size());
}

const char* rbv_report_check_name(const rbv_report* r, int i) {
  return check_in_range(r, i) ? r->rep.checks[static_cast<size_t>(i)].name.c_str()
                              : nullptr;
}

const char* rbv_report_check_anchor(const rbv_report* r, int i) {
  return check_in_range(r, i)
             ? r->rep.checks[static_cast<size_t>(i)].paper_anchor.c_str()
             : nullptr;
}

rbv_status rbv_report_check_residual(const rbv_report* r, int i, double* out) {
  if (!check_in_range(r, i) || out == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "check index out of range");
  }
  *out = r->rep.checks[static_cast<size_t>(i)].residual;
  return RBV_OK;
}

rbv_status rbv_report_check_tolerance(const rbv_report* r, int i,
                                      double* out) {
  if (!check_in_range(r, i) || out == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "check index out of range");
  }
  *out = r->rep.checks[static_cast<size_t>(i)].tolerance;
  return RBV_OK;
}

int rbv_report_check_pass(const rbv_report* r, int i) {
  if (!check_in_range(r, i)) return -1;
  return r->rep.checks[static_cast<size_t>(i)].pass ? 1 : 0;
}

rbv_status rbv_rb_residual_2d(const double b[4], double* out) {
  if (b == nullptr || out == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null input or output");
  }
  return guarded([&] {
    rbv::Mat m(2, 2);
    m << b[0], b[1], b[2], b[3];
    *out = rbv::rb_residual(rbv::rb_data_2d_adjoint(m));
  });
}

rbv_status rbv_classify_rb_2d(const double b[4], double tol, int* family,
                              double* p1, double* p2) {
  if (b == nullptr || family == nullptr || p1 == nullptr || p2 == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null input or output");
  }
  return guarded([&] {
    rbv::Mat m(2, 2);
    m << b[0], b[1], b[2], b[3];
    const rbv::Classification2D cl = rbv::classify_rb_2d(m, tol);
    switch (cl.family) {
      case rbv::Family2D::Family1: *family = 1; break;
      case rbv::Family2D::Family2: *family = 2; break;
      case rbv::Family2D::Family3: *family = 3; break;
      default: *family = 0; break;
    }
    *p1 = cl.p1;
    *p2 = cl.p2;
  });
}

rbv_status rbv_algebra_check(const char* algebra_text,
                             double* jacobi_residual) {
  if (algebra_text == nullptr || jacobi_residual == nullptr) {
    return fail(RBV_ERR_ARGUMENT, "null input or output");
  }
  return guarded([&] {
    *jacobi_residual = rbv::parse_algebra(algebra_text).jacobi_residual();
  });
}

}  // extern "C"
