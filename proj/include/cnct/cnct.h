/* cnct: convergence acceleration for slowly convergent and divergent series.
 * SPDX-License-Identifier: MIT
 *
 * C API of the cnct shared library.
 *
 * The library evaluates slowly convergent (or divergent-but-summable) series
 * by the combined nonlinear-condensation transformation: a monotone series
 * is rearranged into a strictly alternating one by Van Wijngaarden
 * condensation, then accelerated by the Levin d / Weniger delta sequence
 * transformations with Smith-Ford remainder estimates (plus the classical
 * Euler transformation for comparison).
 *
 * Usage pattern:
 *
 *     cnct_problem* p = NULL;
 *     cnct_options  o;
 *     cnct_result*  r = NULL;
 *     cnct_options_init(&o);
 *     if (cnct_problem_polylog(2.0, "0.99999", &p) != CNCT_OK) ...;
 *     if (cnct_run(p, &o, &r) != CNCT_OK) ...;
 *     cnct_result_value(r, &re, &im);
 *     cnct_result_free(r);
 *     cnct_problem_free(p);
 *
 * All functions returning cnct_status leave a human-readable message for
 * the calling thread in cnct_last_error() on failure.  Handles are not
 * thread-safe individually; distinct handles may be used concurrently.
 */

#ifndef CNCT_CNCT_H
#define CNCT_CNCT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CNCT_API
#if defined(_WIN32)
#define CNCT_API
#else
#define CNCT_API __attribute__((visibility("default")))
#endif
#endif

typedef enum cnct_status {
  CNCT_OK = 0,
  CNCT_ERR_BAD_ARG = 1,        /* null pointer / malformed input */
  CNCT_ERR_DOMAIN = 2,         /* parameter outside its domain */
  CNCT_ERR_POLE = 3,           /* evaluation at a pole */
  CNCT_ERR_CONTRACT = 4,       /* a series violated its sign tag */
  CNCT_ERR_INNER_SUM = 5,      /* condensation inner sum failed */
  CNCT_ERR_OVERFLOW_GUARD = 6, /* scaled factor left its safe window */
  CNCT_ERR_INTERNAL = 7
} cnct_status;

typedef enum cnct_transform {
  CNCT_TRANSFORM_LEVIN_D = 0,
  CNCT_TRANSFORM_WENIGER_DELTA = 1,
  CNCT_TRANSFORM_EULER = 2,
  CNCT_TRANSFORM_BOTH = 3 /* levin-d and weniger-delta side by side */
} cnct_transform;

typedef enum cnct_sign_pattern {
  CNCT_SIGN_MONOTONE_NONNEGATIVE = 0,
  CNCT_SIGN_MONOTONE_NONPOSITIVE = 1,
  CNCT_SIGN_ALTERNATING = 2,
  CNCT_SIGN_GENERAL = 3
} cnct_sign_pattern;

typedef enum cnct_family {
  CNCT_FAMILY_LEVIN_D = 0,
  CNCT_FAMILY_WENIGER_DELTA = 1
} cnct_family;

/* Message describing the most recent failure on this thread.  Valid until
 * the next failing call on the same thread; never NULL. */
CNCT_API const char* cnct_last_error(void);

/* Library ABI version (1). */
CNCT_API uint32_t cnct_abi_version(void);

/* ------------------------------------------------------------------ */
/* Problems                                                            */
/* ------------------------------------------------------------------ */

typedef struct cnct_problem cnct_problem;

/* Term generator callback for custom series: must return the term at the
 * given 0-based index, be pure (same index -> same value), and tolerate
 * indices near 2^62 (condensation samples exponentially). */
typedef double (*cnct_term_fn)(uint64_t index, void* ctx);

/* Riemann zeta, real or complex argument, via its exactly condensed
 * alternating series (valid for any z != 1, including divergent cases
 * summed by the transforms). */
CNCT_API cnct_status cnct_problem_zeta(double z, cnct_problem** out);
CNCT_API cnct_status cnct_problem_zeta_complex(double re, double im,
                                               cnct_problem** out);

/* Riemann zeta via the raw Dirichlet terms (z > 1), condensed numerically.
 * Exercises the full pipeline; near z = 1 the inner sums exceed the index
 * bound and the run fails with CNCT_ERR_INNER_SUM (use cnct_problem_zeta). */
CNCT_API cnct_status cnct_problem_zeta_dirichlet(double z, cnct_problem** out);

/* Lerch transcendent Phi(z, s, alpha) = sum z^n/(alpha+n)^s; z as decimal
 * text so the library keeps the exact decimal (e.g. "0.99999"), 0 < z <= 1,
 * alpha > 0. */
CNCT_API cnct_status cnct_problem_lerch(const char* z, double s, double alpha,
                                        cnct_problem** out);

/* Polylogarithm Li_s(z) = sum_{k>=1} z^k/k^s; z as decimal text, in (0,1]. */
CNCT_API cnct_status cnct_problem_polylog(double s, const char* z,
                                          cnct_problem** out);

/* Generalized hypergeometric p+1Fp(nums; dens; z): num_count must equal
 * den_count + 1; z as decimal text, in (0,1]. */
CNCT_API cnct_status cnct_problem_hyp(const double* nums, size_t num_count,
                                      const double* dens, size_t den_count,
                                      const char* z, cnct_problem** out);

/* Modified spherical Bessel-Hankel product sum; r as decimal text in (0,1),
 * y > 0. */
CNCT_API cnct_status cnct_problem_bessel_sum(const char* r, double y,
                                             cnct_problem** out);

/* Already-alternating input: terms[j] is the signed term t_j = (-1)^j A_j.
 * Needs at least 4 terms.  The complex variant takes interleaved re,im
 * pairs (2*count doubles). */
CNCT_API cnct_status cnct_problem_alternating(const double* terms,
                                              size_t count,
                                              cnct_problem** out);
CNCT_API cnct_status cnct_problem_alternating_complex(
    const double* re_im_pairs, size_t count, cnct_problem** out);

/* Custom generator.  Monotone sign patterns run through condensation;
 * alternating/general input is accelerated as-is (terms are the signed
 * t_j).  ctx must outlive every run of the problem. */
CNCT_API cnct_status cnct_problem_custom(cnct_term_fn fn, void* ctx,
                                         cnct_sign_pattern sign,
                                         cnct_problem** out);

CNCT_API void cnct_problem_free(cnct_problem* p);

/* ------------------------------------------------------------------ */
/* Options                                                             */
/* ------------------------------------------------------------------ */

typedef struct cnct_options {
  cnct_transform transform; /* which diagonal(s) to run (default both) */
  double beta;              /* transform shift parameter, > 0 (default 1) */
  double target_rel_tol;    /* convergence tolerance (default 1e-14) */
  uint32_t max_order;       /* highest diagonal order, >= 2 (default 30) */
  uint32_t min_rows;        /* keep producing rows after convergence */
  int include_euler;        /* add the Euler column (default off) */
  /* Condensation inner-sum controls (defaults match the library). */
  double inner_rel_tol;     /* default 1e-16 */
  double inner_abs_floor;   /* default 5e-324 */
  uint32_t max_inner_terms; /* default 64 */
  uint64_t max_index;       /* default 2^62 */
} cnct_options;

/* Fill every field with its default.  Always call this first. */
CNCT_API void cnct_options_init(cnct_options* o);

/* ------------------------------------------------------------------ */
/* Running and results                                                 */
/* ------------------------------------------------------------------ */

typedef struct cnct_result cnct_result;

/* One table row.  Complex values use [0]=re, [1]=im; real results have
 * [1] = 0.  has_* flags say which optional columns were produced. */
typedef struct cnct_row {
  uint64_t n;
  double partial_sum[2];
  double euler[2];
  double levin_d[2];
  double weniger_delta[2];
  int has_euler;
  int has_levin_d;
  int has_weniger_delta;
} cnct_row;

/* Run the pipeline.  Failure to converge by max_order is NOT an error:
 * the call succeeds and cnct_result_converged() reports 0. */
CNCT_API cnct_status cnct_run(const cnct_problem* p, const cnct_options* o,
                              cnct_result** out);

CNCT_API void cnct_result_free(cnct_result* r);

CNCT_API int cnct_result_is_complex(const cnct_result* r);
CNCT_API void cnct_result_value(const cnct_result* r, double* re, double* im);
/* Modulus of the last diagonal increment (heuristic error, not a bound). */
CNCT_API double cnct_result_error_estimate(const cnct_result* r);
/* Distinct original-series indices fetched (condensation mode) or
 * alternating terms consumed. */
CNCT_API uint64_t cnct_result_term_evaluations(const cnct_result* r);
CNCT_API uint32_t cnct_result_order_used(const cnct_result* r);
CNCT_API int cnct_result_converged(const cnct_result* r);
CNCT_API size_t cnct_result_row_count(const cnct_result* r);
CNCT_API cnct_status cnct_result_row(const cnct_result* r, size_t i,
                                     cnct_row* out);
CNCT_API size_t cnct_result_warning_count(const cnct_result* r);
/* Stability warning i; pointer valid while the result lives. */
CNCT_API const char* cnct_result_warning(const cnct_result* r, size_t i);

/* ------------------------------------------------------------------ */
/* Transform-level entry points (validation surface)                   */
/* ------------------------------------------------------------------ */

/* Diagonal T_m^(0) for m = 0..count-1 from partial sums s and remainder
 * estimates omega; flag_out (optional) gets stability flags. */
CNCT_API cnct_status cnct_transform_diagonal(cnct_family family, double beta,
                                             const double* s,
                                             const double* omega, size_t count,
                                             double* diag_out, int* flag_out);

/* Single transform element T_k^(n) by the direct weighted binomial sum
 * (k <= 30); needs s[0..n+k] and omega[0..n+k]. */
CNCT_API cnct_status cnct_transform_direct(cnct_family family, double beta,
                                           const double* s,
                                           const double* omega, size_t count,
                                           uint32_t k, uint32_t n,
                                           double* value_out);

/* Euler transformation partial sums E_0..E_{count-1} of the alternating
 * series sum (-1)^k u_k, from the nonnegative magnitudes u. */
CNCT_API cnct_status cnct_euler_transform(const double* u, size_t count,
                                          double* out);

/* Van Wijngaarden condensation of a custom monotone generator: writes
 * A_0..A_{count-1} and (optionally) the number of distinct original-series
 * fetches.  Condensation options are read from o (may be NULL for
 * defaults); sign must be a monotone pattern. */
CNCT_API cnct_status cnct_condense(cnct_term_fn fn, void* ctx,
                                   cnct_sign_pattern sign,
                                   const cnct_options* o, size_t count,
                                   double* a_out, uint64_t* evals_out);

/* ------------------------------------------------------------------ */
/* Reference values                                                    */
/* ------------------------------------------------------------------ */

/* zeta(-l) for nonnegative integer l (exact via Bernoulli numbers). */
CNCT_API cnct_status cnct_zeta_neg_int(uint32_t l, double* out);

/* Euler-Maclaurin evaluation of zeta(z), z > 1 (N >= 10, 1 <= q <= 10). */
CNCT_API cnct_status cnct_euler_maclaurin_zeta(double z, uint32_t n,
                                               uint32_t q, double* out);

/* Two-term truncation-error estimate for the raw Dirichlet series after
 * the partial sum through term index n (z > 1). */
CNCT_API cnct_status cnct_zeta_truncation_estimate(double z, uint64_t n,
                                                   double* out);

/* Closed form e^{-y(1-r)}/(y(1-r)) of the Bessel-Hankel sum's magnitude
 * (the series sums to its negative); r as decimal text. */
CNCT_API cnct_status cnct_bessel_closed_form(const char* r, double y,
                                             double* out);

/* l!/2^{l+1}, the Abel sum of l! 1F0(l+1; -1), l <= 20. */
CNCT_API cnct_status cnct_one_f_zero_value(uint32_t l, double* out);

/* Abel-summed alternating power tail sum_v (-1)^v (n+v+2)^l, l in 1..4. */
CNCT_API cnct_status cnct_alternating_power_tail(int64_t n, int l,
                                                 double* out);

/* Split decimal text into hi (correctly rounded double) + lo (residual),
 * so that hi + lo equals the written decimal to ~1e-33. */
CNCT_API cnct_status cnct_parse_decimal(const char* text, double* hi,
                                        double* lo);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CNCT_CNCT_H */
