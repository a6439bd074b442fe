/* rbverify.h - C interface to the Rota-Baxter verification library.
 *
 * The library runs numeric certification checks for relative Rota-Baxter
 * operators (weight one) on small Lie algebras, their group-level
 * counterparts on coordinate matrix groups, the associated factorization
 * maps, and classical r-matrix structures.  Work is driven through an
 * options object:
 *
 *     rbv_options* o = rbv_options_create("check-rb");
 *     rbv_options_set_u64(o, "seed", 42);
 *     rbv_report* rep = NULL;
 *     if (rbv_run(o, &rep) == RBV_OK) {
 *         char* text = NULL;
 *         rbv_report_render(rep, "json", &text);
 *         ...
 *         rbv_string_free(text);
 *     }
 *     rbv_report_free(rep);
 *     rbv_options_free(o);
 *
 * Every function that can fail returns an rbv_status; the most recent
 * failure message for the calling thread is available from
 * rbv_last_error().  All strings are UTF-8.  Unless stated otherwise,
 * returned const char* pointers stay valid until the owning object is
 * freed.
 */
#ifndef RBVERIFY_H
#define RBVERIFY_H

#include <stdint.h>

#if defined(_WIN32)
#define RBV_API __declspec(dllexport)
#else
#define RBV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rbv_status {
  RBV_OK = 0,
  RBV_ERR_PARSE = 1,        /* malformed input text */
  RBV_ERR_DIMENSION = 2,    /* shape/dimension mismatch */
  RBV_ERR_DOMAIN = 3,       /* value outside its admissible set */
  RBV_ERR_SINGULAR = 4,     /* a required matrix is not invertible */
  RBV_ERR_PRECONDITION = 5, /* construction needs an unmet hypothesis */
  RBV_ERR_ARGUMENT = 6,     /* unknown command, key, or option value */
  RBV_ERR_INTERNAL = 7      /* unexpected failure */
} rbv_status;

/* Library version string, e.g. "1.0.0". */
RBV_API const char* rbv_version(void);

/* Message of the last error raised on this thread ("" if none). */
RBV_API const char* rbv_last_error(void);

/* ---- options ---------------------------------------------------------- */

typedef struct rbv_options rbv_options;

/* Commands: check-rb classify2d graph matched-pair kappa verify-catalog
 * membership obstruction jprobe upsilon gamma bialgebra poisson suite.
 * Returns NULL only on allocation failure. */
RBV_API rbv_options* rbv_options_create(const char* command);
RBV_API void rbv_options_free(rbv_options* o);

/* Keys: "seed". */
RBV_API rbv_status rbv_options_set_u64(rbv_options* o, const char* key,
                                       uint64_t value);
/* Keys: "samples", "budget". */
RBV_API rbv_status rbv_options_set_i64(rbv_options* o, const char* key,
                                       int64_t value);
/* Keys: "tol", "lambda", "mu", "m", "k". */
RBV_API rbv_status rbv_options_set_f64(rbv_options* o, const char* key,
                                       double value);
/* Keys: "format" ("json"/"text"), "case" ("1.1".."2.3", "heis", "3"),
 * "group" ("ut2", "heis3", "sl2"), and the input payloads
 * "algebra_text", "operator_text", "rmatrix_text" (file contents in the
 * documented text formats). */
RBV_API rbv_status rbv_options_set_str(rbv_options* o, const char* key,
                                       const char* value);

/* ---- running and reports ---------------------------------------------- */

typedef struct rbv_report rbv_report;

/* Runs the configured command; on RBV_OK, *out owns the result. */
RBV_API rbv_status rbv_run(const rbv_options* o, rbv_report** out);
RBV_API void rbv_report_free(rbv_report* r);

/* Renders to "json" or "text"; *out is malloc'd, release it with
 * rbv_string_free. */
RBV_API rbv_status rbv_report_render(const rbv_report* r, const char* format,
                                     char** out);
RBV_API void rbv_string_free(char* s);

RBV_API int rbv_report_all_pass(const rbv_report* r); /* 1 or 0 */
RBV_API int rbv_report_check_count(const rbv_report* r);
RBV_API const char* rbv_report_check_name(const rbv_report* r, int i);
RBV_API const char* rbv_report_check_anchor(const rbv_report* r, int i);
RBV_API rbv_status rbv_report_check_residual(const rbv_report* r, int i,
                                             double* out);
RBV_API rbv_status rbv_report_check_tolerance(const rbv_report* r, int i,
                                              double* out);
RBV_API int rbv_report_check_pass(const rbv_report* r, int i); /* 1/0/-1 */

/* ---- direct helpers ----------------------------------------------------- */

/* Residual of the weight-one operator identity for a 2x2 matrix (row-major
 * b = {b11, b12, b21, b22}) on the canonical 2-dimensional nonabelian
 * algebra with its adjoint action. */
RBV_API rbv_status rbv_rb_residual_2d(const double b[4], double* out);

/* Classifies the same operator into its solution family.
 * *family: 0 = none, 1..3 = family index; *p1, *p2 = family parameters. */
RBV_API rbv_status rbv_classify_rb_2d(const double b[4], double tol,
                                      int* family, double* p1, double* p2);

/* Parses algebra text and reports its Jacobi residual. */
RBV_API rbv_status rbv_algebra_check(const char* algebra_text,
                                     double* jacobi_residual);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RBVERIFY_H */
