/* C interface to the eicp library. All functions return an eicp_status;
 * on failure eicp_last_error_message() describes the error for the calling
 * thread. Strings and arrays are written into caller buffers: *needed (or
 * *count) always receives the required size, and EICP_ERR_BUFFER_TOO_SMALL
 * is returned when the buffer cannot hold it. String sizes include the
 * terminating NUL. Matrices are passed row-major. */
#ifndef EICP_H
#define EICP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EICP_BUILDING_LIBRARY)
#    define EICP_API __declspec(dllexport)
#  else
#    define EICP_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define EICP_API __attribute__((visibility("default")))
#else
#  define EICP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eicp_status {
  EICP_OK = 0,
  EICP_ERR_INVALID_ARGUMENT = 1,
  EICP_ERR_NOT_SYMMETRIC = 2,
  EICP_ERR_DIMENSION_MISMATCH = 3,
  EICP_ERR_NOT_POSITIVE_DEFINITE = 4,
  EICP_ERR_NON_CONVERGENCE = 5,
  EICP_ERR_HYPOTHESIS_VIOLATION = 6,
  EICP_ERR_NEGATIVE_DISCRIMINANT = 7,
  EICP_ERR_DIMENSION_TOO_LARGE = 8,
  EICP_ERR_PARAM_OUT_OF_RANGE = 9,
  EICP_ERR_NO_REAL_ROOT = 10,
  EICP_ERR_NOT_COMMUTING = 11,
  EICP_ERR_NEGATIVE_SHIFT = 12,
  EICP_ERR_PARSE = 13,
  EICP_ERR_INTERNAL = 14,
  EICP_ERR_BUFFER_TOO_SMALL = 15,
  EICP_ERR_UNKNOWN = 99
} eicp_status;

typedef struct eicp_pair eicp_pair;
typedef struct eicp_report eicp_report;
typedef struct eicp_family eicp_family;

typedef struct eicp_interval {
  double lo;
  double hi;
} eicp_interval;

typedef enum eicp_copositivity {
  EICP_COPOSITIVE = 0,
  EICP_NOT_COPOSITIVE = 1,
  EICP_COPOSITIVITY_UNKNOWN = 2
} eicp_copositivity;

typedef struct eicp_certificate {
  int sdd;
  int dd;
  int pd;
  eicp_copositivity copositivity;
} eicp_certificate;

typedef enum eicp_set_kind {
  EICP_SET_K1 = 0,     /* one-row set */
  EICP_SET_K1_COP = 1, /* one-row set refined by copositivity of A */
  EICP_SET_K2 = 2      /* two-row set */
} eicp_set_kind;

typedef enum eicp_shift_mode {
  EICP_SHIFT_NONE = 0,
  EICP_SHIFT_AUTO = 1,
  EICP_SHIFT_FIXED = 2
} eicp_shift_mode;

typedef struct eicp_options {
  int want_k1;
  int want_k1_cop;
  int want_k2;
  int require_sets; /* fail instead of skipping a set whose hypotheses fail */
  int want_spectrum;
  eicp_shift_mode shift_mode;
  double shift;
  size_t n_max;
  double support_tol;
  double feas_tol; /* <= 0 selects 1e-8 (1 + ||A||_inf + ||B||_inf) */
  double sign_tol;
  double dedup_rel_tol;
} eicp_options;

typedef struct eicp_family_expected {
  eicp_interval hull_k1;
  eicp_interval hull_k2;
  eicp_interval gamma;
} eicp_family_expected;

EICP_API const char* eicp_version(void);
EICP_API const char* eicp_status_name(eicp_status status);
EICP_API const char* eicp_last_error_message(void);

/* b may be NULL for the identity. */
EICP_API eicp_status eicp_pair_create(size_t n, const double* a, const double* b, eicp_pair** out);
EICP_API eicp_status eicp_pair_from_json(const char* text, eicp_pair** out);
EICP_API eicp_status eicp_pair_from_file(const char* path, eicp_pair** out);
EICP_API void eicp_pair_destroy(eicp_pair* pair);
EICP_API eicp_status eicp_pair_size(const eicp_pair* pair, size_t* n);
EICP_API eicp_status eicp_pair_to_json(const eicp_pair* pair, char* buf, size_t cap, size_t* needed);
EICP_API eicp_status eicp_pair_certificates(const eicp_pair* pair, eicp_certificate* a,
                                            eicp_certificate* b);
EICP_API eicp_status eicp_pair_shift(const eicp_pair* pair, double mu, eicp_pair** out);
EICP_API eicp_status eicp_suggest_shift(const eicp_pair* pair, double* mu);

EICP_API eicp_status eicp_hull_k1(const eicp_pair* pair, eicp_interval* out);
EICP_API eicp_status eicp_hull_k2(const eicp_pair* pair, eicp_interval* out);
EICP_API eicp_status eicp_gamma(const eicp_pair* pair, eicp_interval* out);
/* Normalized union of the chosen set. */
EICP_API eicp_status eicp_set_intervals(const eicp_pair* pair, eicp_set_kind kind,
                                        eicp_interval* buf, size_t cap, size_t* count);
/* Deduplicated complementarity eigenvalues, ascending. n_max == 0 uses 15. */
EICP_API eicp_status eicp_spectrum_values(const eicp_pair* pair, size_t n_max, double* buf,
                                          size_t cap, size_t* count);
/* rows are 0-based. */
EICP_API eicp_status eicp_multi_row_roots(const eicp_pair* pair, const size_t* rows, size_t k,
                                          double* low_min, double* up_max);

/* A = E + eps I, B = (n - 1 + eps) I - E, with E the all-ones matrix. */
EICP_API eicp_status eicp_family_all_ones(size_t n, double eps, eicp_family** out);
/* B = beta I + R/(n-1) (E - I), A = c B. */
EICP_API eicp_status eicp_family_proportional(size_t n, double beta, double r, double c,
                                              eicp_family** out);
EICP_API void eicp_family_destroy(eicp_family* family);
EICP_API eicp_status eicp_family_pair(const eicp_family* family, eicp_pair** out);
EICP_API eicp_status eicp_family_expected_values(const eicp_family* family,
                                                 eicp_family_expected* out);
EICP_API eicp_status eicp_family_sidecar_json(const eicp_family* family, char* buf, size_t cap,
                                              size_t* needed);

EICP_API void eicp_options_default(eicp_options* opts);
/* opts may be NULL for defaults. */
EICP_API eicp_status eicp_report_create(const eicp_pair* pair, const eicp_options* opts,
                                        eicp_report** out);
EICP_API void eicp_report_destroy(eicp_report* report);
EICP_API eicp_status eicp_report_json(const eicp_report* report, char* buf, size_t cap,
                                      size_t* needed);
EICP_API eicp_status eicp_report_text(const eicp_report* report, char* buf, size_t cap,
                                      size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* EICP_H */
