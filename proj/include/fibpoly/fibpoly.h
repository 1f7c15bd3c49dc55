#ifndef FIBPOLY_FIBPOLY_H
#define FIBPOLY_FIBPOLY_H

/*
 * C interface to libfibpoly: exact Fibonacci and Lucas polynomials and their
 * one-level power/product linearizations.
 *
 * Conventions:
 *  - Every fallible call returns an fp_status; results are written through
 *    out-pointers only on FP_OK.
 *  - Objects are opaque handles owned by the caller and released with the
 *    matching *_free function. Passing NULL to a *_free function is a no-op.
 *  - Big integers cross the boundary as NUL-terminated decimal strings.
 *    Strings returned by the library are released with fp_string_free.
 *  - fp_last_error() returns a thread-local description of the most recent
 *    failure on the calling thread.
 *  - Handles are immutable after construction except fp_cache, which may be
 *    shared between threads (reads are concurrent, growth is serialized).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FIBPOLY_BUILDING_LIBRARY)
#    define FIBPOLY_API __declspec(dllexport)
#  else
#    define FIBPOLY_API __declspec(dllimport)
#  endif
#else
#  define FIBPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_ERR_DOMAIN = 1,           /* precondition on n / e violated */
  FP_ERR_NOT_DIVISIBLE = 2,    /* an asserted exact division left a remainder */
  FP_ERR_IDENTITY = 3,         /* two independent computations disagreed */
  FP_ERR_INVALID_ARGUMENT = 4, /* NULL handle, index out of range */
  FP_ERR_PARSE = 5,            /* malformed decimal or JSON input */
  FP_ERR_INTERNAL = 6
} fp_status;

typedef enum fp_term_kind { FP_TERM_FIB = 0, FP_TERM_LUCAS = 1, FP_TERM_CONST = 2 } fp_term_kind;

typedef enum fp_identity_kind {
  FP_FIB_POWER = 0,
  FP_LUCAS_POWER = 1,
  FP_PRODUCT = 2
} fp_identity_kind;

typedef enum fp_verdict { FP_VERDICT_EQUAL = 0, FP_VERDICT_MISMATCH = 1, FP_VERDICT_NOT_DIVISIBLE = 2 } fp_verdict;

typedef enum fp_sequence_kind { FP_SEQ_FIB = 0, FP_SEQ_LUCAS = 1 } fp_sequence_kind;

/* Degree reported for the zero polynomial. */
#define FP_DEGREE_NEG_INFINITY INT64_MIN

typedef struct fp_poly fp_poly;
typedef struct fp_cache fp_cache;
typedef struct fp_certificate fp_certificate;
typedef struct fp_report fp_report;
typedef struct fp_sweep fp_sweep;

FIBPOLY_API const char* fp_version(void);
FIBPOLY_API const char* fp_status_name(fp_status status);
FIBPOLY_API const char* fp_last_error(void);
FIBPOLY_API void fp_string_free(char* s);

/* ---- polynomials ------------------------------------------------------- */

/* coeffs[i] is the decimal coefficient of x^i; trailing zeros are trimmed. */
FIBPOLY_API fp_status fp_poly_from_coeffs(const char* const* coeffs, size_t count, fp_poly** out);
/* JSON array of decimal strings, ascending degree. */
FIBPOLY_API fp_status fp_poly_from_json(const char* json, fp_poly** out);
FIBPOLY_API fp_status fp_poly_clone(const fp_poly* p, fp_poly** out);
FIBPOLY_API void fp_poly_free(fp_poly* p);

FIBPOLY_API int64_t fp_poly_degree(const fp_poly* p);
/* Number of stored coefficients (degree + 1, or 0 for the zero polynomial). */
FIBPOLY_API size_t fp_poly_size(const fp_poly* p);
FIBPOLY_API fp_status fp_poly_coeff(const fp_poly* p, size_t i, char** out);
FIBPOLY_API int fp_poly_equal(const fp_poly* a, const fp_poly* b);
FIBPOLY_API fp_status fp_poly_to_text(const fp_poly* p, char** out);
FIBPOLY_API fp_status fp_poly_to_json(const fp_poly* p, char** out);

FIBPOLY_API fp_status fp_poly_add(const fp_poly* a, const fp_poly* b, fp_poly** out);
FIBPOLY_API fp_status fp_poly_mul(const fp_poly* a, const fp_poly* b, fp_poly** out);
FIBPOLY_API fp_status fp_poly_pow(const fp_poly* p, uint64_t e, fp_poly** out);
/* FP_ERR_NOT_DIVISIBLE when den does not divide num exactly. */
FIBPOLY_API fp_status fp_poly_exact_div(const fp_poly* num, const fp_poly* den, fp_poly** out);
/* x0 is a decimal integer string. */
FIBPOLY_API fp_status fp_poly_eval(const fp_poly* p, const char* x0, char** out);

FIBPOLY_API fp_status fp_binomial(uint64_t n, int64_t k, char** out);

/* ---- sequences --------------------------------------------------------- */

FIBPOLY_API fp_status fp_cache_new(fp_cache** out);
FIBPOLY_API void fp_cache_free(fp_cache* cache);

/* A NULL cache selects the cache-free recurrence path. */
FIBPOLY_API fp_status fp_fib(fp_cache* cache, uint64_t n, fp_poly** out);
FIBPOLY_API fp_status fp_lucas(fp_cache* cache, uint64_t n, fp_poly** out);
/* Closed-form single sums; FP_ERR_DOMAIN for n = 0. */
FIBPOLY_API fp_status fp_fib_expanded(uint64_t n, fp_poly** out);
FIBPOLY_API fp_status fp_lucas_expanded(uint64_t n, fp_poly** out);
FIBPOLY_API fp_status fp_custom_sequence(const fp_poly* f0, const fp_poly* f1, uint64_t n, fp_poly** out);

/* ---- linearization ----------------------------------------------------- */

/* Each call writes the certificate and the exactly reconstructed polynomial.
 * Either out-pointer may be NULL when that result is not wanted.
 * FP_ERR_DOMAIN for e = 0. A NULL cache uses a private temporary cache. */
FIBPOLY_API fp_status fp_linearize_fib_power(fp_cache* cache, uint64_t n, uint64_t e, fp_certificate** cert,
                                             fp_poly** poly);
FIBPOLY_API fp_status fp_linearize_lucas_power(fp_cache* cache, uint64_t n, uint64_t e, fp_certificate** cert,
                                               fp_poly** poly);
FIBPOLY_API fp_status fp_product_linearization(fp_cache* cache, uint64_t n, uint64_t d, fp_certificate** cert,
                                               fp_poly** poly);

FIBPOLY_API void fp_certificate_free(fp_certificate* cert);
FIBPOLY_API fp_identity_kind fp_certificate_kind(const fp_certificate* cert);
FIBPOLY_API uint64_t fp_certificate_n(const fp_certificate* cert);
/* Exponent for power kinds, shift d for FP_PRODUCT. */
FIBPOLY_API uint64_t fp_certificate_parameter(const fp_certificate* cert);
FIBPOLY_API uint64_t fp_certificate_denom_exponent(const fp_certificate* cert);
FIBPOLY_API size_t fp_certificate_term_count(const fp_certificate* cert);
/* multiplier receives a decimal string; any out-pointer may be NULL. */
FIBPOLY_API fp_status fp_certificate_term(const fp_certificate* cert, size_t i, fp_term_kind* kind,
                                          uint64_t* subscript, char** multiplier);
FIBPOLY_API fp_status fp_certificate_symbolic(const fp_certificate* cert, size_t i, char** out);
FIBPOLY_API fp_status fp_certificate_to_text(const fp_certificate* cert, char** out);
FIBPOLY_API fp_status fp_certificate_to_json(const fp_certificate* cert, char** out);
FIBPOLY_API fp_status fp_certificate_from_json(const char* json, fp_certificate** out);
/* Numerator / (x^2+4)^d; FP_ERR_NOT_DIVISIBLE if the certificate is wrong. */
FIBPOLY_API fp_status fp_certificate_reconstruct(fp_cache* cache, const fp_certificate* cert, fp_poly** out);

/* ---- verification ------------------------------------------------------ */

/* k is the exponent (power kinds) or the shift d (FP_PRODUCT). A failed
 * identity is reported through the verdict, not the status. */
FIBPOLY_API fp_status fp_verify_identity(fp_cache* cache, fp_identity_kind kind, uint64_t n, uint64_t k,
                                         fp_report** out);
FIBPOLY_API void fp_report_free(fp_report* report);
FIBPOLY_API fp_verdict fp_report_verdict(const fp_report* report);
FIBPOLY_API const fp_certificate* fp_report_certificate(const fp_report* report);
/* NULL when the verdict is FP_VERDICT_NOT_DIVISIBLE. Owned by the report. */
FIBPOLY_API const fp_poly* fp_report_reconstructed(const fp_report* report);
FIBPOLY_API const fp_poly* fp_report_oracle(const fp_report* report);
FIBPOLY_API fp_status fp_report_to_json(const fp_report* report, char** out);

/* Runs every identity over 0<=n<=max_n, 1<=e<=max_e, 0<=d<=max_d. */
FIBPOLY_API fp_status fp_sweep_run(fp_cache* cache, uint64_t max_n, uint64_t max_e, uint64_t max_d, fp_sweep** out);
FIBPOLY_API void fp_sweep_free(fp_sweep* sweep);
FIBPOLY_API uint64_t fp_sweep_checks(const fp_sweep* sweep);
FIBPOLY_API size_t fp_sweep_failure_count(const fp_sweep* sweep);
/* Borrowed strings, valid until fp_sweep_free. Any out-pointer may be NULL. */
FIBPOLY_API fp_status fp_sweep_failure(const fp_sweep* sweep, size_t i, const char** identity, const char** repro,
                                       const char** detail);

/* ---- integer specializations ------------------------------------------- */

FIBPOLY_API fp_status fp_classical_sum(uint64_t n, char** out);
FIBPOLY_API fp_status fp_double_sum_square(uint64_t n, char** out);
/* FP_ERR_DOMAIN for n = 0. */
FIBPOLY_API fp_status fp_square_single_sum(uint64_t n, char** out);
FIBPOLY_API fp_status fp_cube_single_sum(uint64_t n, char** out);
/* F_n(x0) or L_n(x0); FP_ERR_IDENTITY if polynomial evaluation and the
 * integer recurrence disagree. */
FIBPOLY_API fp_status fp_generalized_point(uint64_t n, const char* x0, fp_sequence_kind kind, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FIBPOLY_FIBPOLY_H */
