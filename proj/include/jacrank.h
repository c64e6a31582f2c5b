/*
 * jacrank — certified Picard rank computations for Jacobians of
 * hyperelliptic curves over Q.
 *
 * The library reduces a curve y^2 = f(x) modulo two well-chosen good primes,
 * reconstructs the characteristic polynomial of Frobenius from exact point
 * counts, and, when the two reductions are absolutely simple, ordinary, and
 * have coprime discriminants, certifies that the geometric endomorphism ring
 * of the Jacobian is Z — hence that the Neron-Severi group has rank 1 and is
 * freely generated by the theta class. Certificates serialize to JSON and
 * re-verify from scratch.
 *
 * All functions returning jr_status use JR_OK for success; on failure a
 * thread-local message is available from jr_last_error(). Strings returned
 * through char** out-parameters are heap-allocated and must be released with
 * jr_string_free().
 */

#ifndef JACRANK_H
#define JACRANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#define JR_API __declspec(dllexport)
#else
#define JR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jr_status {
  JR_OK = 0,
  JR_ERROR_INVALID_ARGUMENT = 1, /* bad parameters, violated preconditions */
  JR_ERROR_PARSE = 2,            /* expression or JSON syntax */
  JR_ERROR_SINGULAR_CURVE = 3,   /* f is not squarefree */
  JR_ERROR_UNSUPPORTED = 4,      /* degree/genus outside the supported range */
  JR_ERROR_BAD_REDUCTION = 5,    /* the curve degenerates at the given prime */
  JR_ERROR_RESOURCE_LIMIT = 6,   /* enumeration cap exceeded */
  JR_ERROR_CORRUPT_COUNTS = 7,   /* counts fail an exactness or Weil-bound check */
  JR_ERROR_SEARCH_EXHAUSTED = 8, /* no qualifying prime pair below p_max */
  JR_ERROR_INTERNAL = 9
} jr_status;

typedef enum jr_verdict {
  JR_VERDICT_TRIVIAL_Z = 0,   /* End(J over Qbar) = Z certified */
  JR_VERDICT_INCONCLUSIVE = 1 /* criterion not met; no claim */
} jr_verdict;

typedef struct jr_curve jr_curve;
typedef struct jr_certificate jr_certificate;

typedef struct jr_options {
  uint64_t q_cap;      /* enumeration cap on q = p^n (default 2000000) */
  int relax_ordinary;  /* accept non-ordinary reductions; verdicts downgrade */
} jr_options;

JR_API const char* jr_version(void);

/* Thread-local message for the most recent failure; empty after success. */
JR_API const char* jr_last_error(void);

JR_API void jr_string_free(char* s);
JR_API jr_options jr_options_default(void);

/* --- curves --------------------------------------------------------- */

/* Parses f(x) from an expression such as "x^2*(x-1)^2*(x^2+1)+3". */
JR_API jr_status jr_curve_parse(const char* expression, jr_curve** out);

/* Builds a curve from comma-separated integer coefficients, ascending. */
JR_API jr_status jr_curve_from_coeffs_csv(const char* csv, jr_curve** out);

JR_API void jr_curve_free(jr_curve* curve);

JR_API int jr_curve_genus(const jr_curve* curve);

/* Canonical expression text for the curve's f. */
JR_API jr_status jr_curve_expression(const jr_curve* curve, char** out);

JR_API jr_status jr_curve_has_good_reduction(const jr_curve* curve, uint64_t p, int* out);

/* Number of F_{p^n}-points of the smooth projective model. */
JR_API jr_status jr_curve_count_points(const jr_curve* curve, uint64_t p, uint32_t n,
                                       uint64_t q_cap, uint64_t* out);

/* One prime's Frobenius data as a JSON object: p, counts, the polynomial
 * rendered and as descending coefficient strings, validity, ordinariness,
 * absolute simplicity, discriminant. */
JR_API jr_status jr_curve_lpoly_json(const jr_curve* curve, uint64_t p, uint64_t q_cap,
                                     char** out_json);

/* --- certification --------------------------------------------------- */

JR_API jr_status jr_certify_at_primes(const jr_curve* curve, uint64_t p1, uint64_t p2,
                                      const jr_options* options, jr_certificate** out);

/* Scans primes 3, 5, 7, ... <= p_max for the first usable pair with coprime
 * discriminants. */
JR_API jr_status jr_certify_search(const jr_curve* curve, uint64_t p_max,
                                   const jr_options* options, jr_certificate** out);

JR_API void jr_certificate_free(jr_certificate* cert);

JR_API jr_verdict jr_certificate_end_ring(const jr_certificate* cert);

/* Neron-Severi rank: 1 when certified, -1 when unknown. */
JR_API int jr_certificate_ns_rank(const jr_certificate* cert);

/* 1 = theta generates, 0 = no claim recorded as false, -1 = unknown. */
JR_API int jr_certificate_theta_generates(const jr_certificate* cert);

JR_API jr_status jr_certificate_to_json(const jr_certificate* cert, char** out);
JR_API jr_status jr_certificate_from_json(const char* json_text, jr_certificate** out);

/* Recomputes everything from scratch, including the over-determination
 * recounts N_(g+1)..N_(2g). *ok is 1 iff every recomputation matches; on
 * mismatch *report (optional) carries the first divergence. */
JR_API jr_status jr_certificate_verify(const jr_certificate* cert, uint64_t q_cap, int* ok,
                                       char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* JACRANK_H */
