#ifndef JORCON_H
#define JORCON_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define JORCON_API __declspec(dllexport)
#else
#define JORCON_API __attribute__((visibility("default")))
#endif

/* Status codes. Every function returning int reports one of these. */
enum {
  JORCON_OK = 0,
  JORCON_ERR_INVALID_ARGUMENT = 1,
  JORCON_ERR_DIVISION_BY_ZERO = 2,
  JORCON_ERR_POLE_AT_Q1 = 3,
  JORCON_ERR_DIMENSION_MISMATCH = 4,
  JORCON_ERR_SINGULAR_MATRIX = 5,
  JORCON_ERR_UNSUPPORTED_DIMENSION = 6,
  JORCON_ERR_INTERNAL_MISMATCH = 7,
  JORCON_ERR_MISSING_REWRITE_RULE = 8,
  JORCON_ERR_INVALID_LABEL = 9,
  JORCON_ERR_INVALID_CUTOFF = 10,
  JORCON_ERR_TRUNCATION_TOO_SMALL = 11,
  JORCON_ERR_PARSE = 12,
  JORCON_ERR_INTERNAL = 13
};

enum { JORCON_BASIS_PLAIN = 0, JORCON_BASIS_TILDE = 1, JORCON_BASIS_BOTH = -1 };

typedef struct jorcon_matrix jorcon_matrix;
typedef struct jorcon_relset jorcon_relset;
typedef struct jorcon_result jorcon_result;

JORCON_API const char* jorcon_version(void);
JORCON_API const char* jorcon_status_name(int status);

/* Diagnostics of the last failed call on this thread. */
JORCON_API const char* jorcon_last_error(void);
/* Returns 1 and fills row/col (1-based) if the last failure was a pole at q = 1. */
JORCON_API int jorcon_last_pole(int* row, int* col);
JORCON_API const char* jorcon_last_pole_context(void);
JORCON_API const char* jorcon_last_pole_coefficient(void);

/* Matrices. Names: Rq, Rh, Rh-closed, Cq, Ch, Rtilde-q, Rtilde-h, g. */
JORCON_API int jorcon_matrix_named(const char* name, int N, jorcon_matrix** out);
JORCON_API int jorcon_matrix_from_json(const char* text, jorcon_matrix** out);
JORCON_API int jorcon_matrix_size(const jorcon_matrix* m);
/* Strings returned below stay valid until the handle is freed. */
JORCON_API const char* jorcon_matrix_entry(const jorcon_matrix* m, int row, int col);
JORCON_API const char* jorcon_matrix_json(const jorcon_matrix* m);
JORCON_API const char* jorcon_matrix_text(const jorcon_matrix* m);
JORCON_API int jorcon_matrix_equal(const jorcon_matrix* a, const jorcon_matrix* b);
JORCON_API void jorcon_matrix_free(jorcon_matrix* m);

/* Relation sets.
   family: "q", "hh", "classical", "contracted"
   form:   "compact" (default), "componentwise", "m1", "explicit"
   sigma:  +1 or -1; variant: 1 or 2 (q and contracted only). */
typedef struct jorcon_relations_spec {
  int n;
  int m;
  int sigma;
  const char* family;
  const char* form;
  int variant;
  int basis;
} jorcon_relations_spec;

JORCON_API int jorcon_relations_build(const jorcon_relations_spec* spec, jorcon_relset** out);
JORCON_API int jorcon_relset_count(const jorcon_relset* r);
JORCON_API const char* jorcon_relset_text(const jorcon_relset* r);
JORCON_API const char* jorcon_relset_json(const jorcon_relset* r);
JORCON_API int jorcon_relset_span_equal(const jorcon_relset* a, const jorcon_relset* b, int* equal);
JORCON_API void jorcon_relset_free(jorcon_relset* r);

/* Command results carry a text and a JSON rendering and a pass flag. */
JORCON_API int jorcon_cgc_table(jorcon_result** out);

/* basis: JORCON_BASIS_PLAIN, JORCON_BASIS_TILDE or JORCON_BASIS_BOTH. */
JORCON_API int jorcon_fock_report(int sigma, int cutoff, int basis, jorcon_result** out);

/* Zero fields select the defaults: all suites' grids, both signs, both
   variants, cutoff 6, JORCON_THREADS workers. */
typedef struct jorcon_verify_spec {
  const char* suite;
  int n;
  int m;
  int sigma;
  int variant;
  int basis;
  int cutoff;
  int threads;
  int timing;
} jorcon_verify_spec;

JORCON_API void jorcon_verify_spec_init(jorcon_verify_spec* spec);
JORCON_API int jorcon_verify(const jorcon_verify_spec* spec, jorcon_result** out);

JORCON_API int jorcon_result_passed(const jorcon_result* r);
JORCON_API const char* jorcon_result_text(const jorcon_result* r);
JORCON_API const char* jorcon_result_json(const jorcon_result* r);
JORCON_API void jorcon_result_free(jorcon_result* r);

#ifdef __cplusplus
}
#endif

#endif
