/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the qqstab shared library: verification tools for the
 * quadratic-quartic functional equation
 *
 *   f(2x+y) + f(2x-y) = 4[f(x+y) + f(x-y)] + 2[f(2x) - 4f(x)] - 6f(y)
 *
 * on random normed spaces, plus the constructive stability machinery that
 * splits a near-solution into quadratic and quartic limits.
 *
 * Conventions:
 *   - every fallible call returns qq_status and writes results through out
 *     pointers; QQ_OK is 0;
 *   - objects created by qq_*_new/_step/... are released with the matching
 *     qq_*_free (never with free());
 *   - vectors are contiguous double arrays with an explicit length.
 */
#ifndef QQSTAB_H
#define QQSTAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define QQSTAB_API __attribute__((visibility("default")))
#else
#define QQSTAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qq_status {
  QQ_OK = 0,
  QQ_ERR_NULL = 1,     /* required pointer was NULL */
  QQ_ERR_DOMAIN = 2,   /* argument outside the mathematical domain */
  QQ_ERR_EMPTY = 3,    /* empty input where at least one element is needed */
  QQ_ERR_PARSE = 4,    /* malformed value or config line */
  QQ_ERR_BADKEY = 5,   /* unknown configuration key */
  QQ_ERR_RANGE = 6,    /* argument outside the accepted range */
  QQ_ERR_IO = 7,       /* file could not be read or written */
  QQ_ERR_INTERNAL = 8  /* unexpected failure */
} qq_status;

/* Library version ("major.minor.patch") and a human-readable status name. */
QQSTAB_API const char* qq_version(void);
QQSTAB_API const char* qq_status_str(qq_status s);

/* ---------------------------------------------------------------- t-norms */

typedef enum qq_tnorm {
  QQ_TNORM_MINIMUM = 0,
  QQ_TNORM_PRODUCT = 1,
  QQ_TNORM_LUKASIEWICZ = 2
} qq_tnorm;

/* T(a, b) for a, b in [0, 1] (values within 1e-12 outside are clamped). */
QQSTAB_API qq_status qq_tnorm_apply(qq_tnorm kind, double a, double b,
                                    double* out);

/* Left fold T(...T(T(x1, x2), x3)..., xn); n >= 1. */
QQSTAB_API qq_status qq_tnorm_fold(qq_tnorm kind, const double* xs, size_t n,
                                   double* out);

/* ------------------------------------------------ distribution functions */

/* A distance distribution function F: R -> [0, 1], nondecreasing and
 * left-continuous with F(0) = 0. */
typedef struct qq_distfn qq_distfn;

/* Step function: F(t) = 1 for t > c, else 0 (c >= 0). */
QQSTAB_API qq_status qq_distfn_step(double c, qq_distfn** out);
/* Rational control function: F(t) = t / (t + c) for t > 0 (c >= 0; c = 0
 * degenerates to the maximal element eps0). */
QQSTAB_API qq_status qq_distfn_rational_control(double c, qq_distfn** out);
/* Piecewise-linear interpolant of (ts[i], vs[i]) from (0, 0), clamped right;
 * ts must be strictly increasing and positive, vs in [0, 1]. */
QQSTAB_API qq_status qq_distfn_grid(const double* ts, const double* vs,
                                    size_t n, qq_distfn** out);
/* The maximal element eps0 (= step at 0). */
QQSTAB_API qq_status qq_distfn_eps0(qq_distfn** out);

QQSTAB_API qq_status qq_distfn_eval(const qq_distfn* f, double t, double* out);
QQSTAB_API void qq_distfn_free(qq_distfn* f);

/* -------------------------------------------------------- test functions */

/* f(x) = a*||x||_2^4 + b*||x||_2^2 + delta * eta(x), where eta is a seeded
 * deterministic perturbation with values in [-1, 1). */
typedef struct qq_testfn qq_testfn;

QQSTAB_API qq_status qq_testfn_new(double a, double b, double delta,
                                   uint64_t seed, size_t dimension,
                                   qq_testfn** out);
QQSTAB_API qq_status qq_testfn_eval(const qq_testfn* f, const double* x,
                                    size_t dim, double* out);
/* Residual of the quadratic-quartic equation at (x, y); zero (up to
 * delta-noise) exactly on the a*||x||^4 + b*||x||^2 family. */
QQSTAB_API qq_status qq_testfn_residual_qq(const qq_testfn* f, const double* x,
                                           const double* y, size_t dim,
                                           double* out);
QQSTAB_API void qq_testfn_free(qq_testfn* f);

/* ------------------------------------------------------- limit extraction */

/* Caller-supplied evaluable: must return f(x) for the dim-vector x. */
typedef double (*qq_eval_fn)(const double* x, size_t dim, void* ctx);

/* Per-level trace of a direct-method run. */
typedef struct qq_trace qq_trace;

/* Quadratic-part limit lim_n g(2^n x) / 4^n evaluated for n = 0..n_max
 * (2 <= n_max <= 64). Stops early only when a scaled coordinate would exceed
 * `guard` (the trace is then marked truncated). `trace` may be NULL if only
 * the value is wanted. */
QQSTAB_API qq_status qq_quadratic_limit(qq_eval_fn g, void* ctx,
                                        const double* x, size_t dim,
                                        uint64_t n_max, double tol,
                                        double guard, double* value,
                                        qq_trace** trace);
/* Quartic-part analogue lim_n h(2^n x) / 16^n. */
QQSTAB_API qq_status qq_quartic_limit(qq_eval_fn h, void* ctx, const double* x,
                                      size_t dim, uint64_t n_max, double tol,
                                      double guard, double* value,
                                      qq_trace** trace);

QQSTAB_API size_t qq_trace_levels(const qq_trace* t);
QQSTAB_API qq_status qq_trace_level(const qq_trace* t, size_t i, uint64_t* n,
                                    double* value, double* delta);
QQSTAB_API int qq_trace_converged(const qq_trace* t);
QQSTAB_API int qq_trace_truncated(const qq_trace* t);
QQSTAB_API double qq_trace_ratio(const qq_trace* t);
QQSTAB_API void qq_trace_free(qq_trace* t);

/* --------------------------------------------------------- stability bounds */

typedef enum qq_combiner {
  QQ_COMBINER_TNORM = 0,      /* t-norm fold of the terms */
  QQ_COMBINER_CLAMPED_SUM = 1 /* min(1, sum of the terms) */
} qq_combiner;

typedef enum qq_rho_family {
  QQ_RHO_STEP_DEFECT = 0, /* rho_{x,y} = step at c (use c_or_theta = c) */
  QQ_RHO_CONTROL_TYPE = 1 /* rho_{x,y} = t/(t + theta(||x||^p + ||y||^p)) */
} qq_rho_family;

/* psi(x, t): combiner over [rho_{x,x}(t/4), rho_{x,2x}(t), rho_{0,x}(3t/4)];
 * t > 0. `p` is ignored for the step family. */
QQSTAB_API qq_status qq_psi(qq_rho_family family, double c_or_theta, double p,
                            const double* x, size_t dim, double t,
                            qq_combiner combiner, qq_tnorm tnorm, double* out);

/* Depth-truncated lower-bound folds for the quadratic part, the quartic
 * part, and the combined reconstruction. `last_decrement` (optional) reports
 * the fold drop contributed by the deepest term. */
QQSTAB_API qq_status qq_bound_rhs_quadratic(qq_rho_family family,
                                            double c_or_theta, double p,
                                            const double* x, size_t dim,
                                            double t, uint64_t depth,
                                            qq_combiner combiner,
                                            qq_tnorm tnorm, double* value,
                                            double* last_decrement);
QQSTAB_API qq_status qq_bound_rhs_quartic(qq_rho_family family,
                                          double c_or_theta, double p,
                                          const double* x, size_t dim, double t,
                                          uint64_t depth, qq_combiner combiner,
                                          qq_tnorm tnorm, double* value,
                                          double* last_decrement);
QQSTAB_API qq_status qq_bound_rhs_combined(qq_rho_family family,
                                           double c_or_theta, double p,
                                           const double* x, size_t dim,
                                           double t, uint64_t depth,
                                           qq_combiner combiner, qq_tnorm tnorm,
                                           double* value,
                                           double* last_decrement);

/* ------------------------------------------------------------ axiom checks */

typedef enum qq_space {
  QQ_SPACE_INDUCED = 0,    /* mu_x(t) = t / (t + ||x||); satisfies RN1-RN3 */
  QQ_SPACE_BROKEN_RN2 = 1, /* fixture violating the rescaling axiom */
  QQ_SPACE_CONST_EPS0 = 2  /* fixture violating the identity axiom */
} qq_space;

/* Seeded fuzz of the random-normed-space axioms; writes the number of
 * violations found (0 = pass). */
QQSTAB_API qq_status qq_check_axioms(qq_space space, qq_tnorm tnorm,
                                     size_t samples, uint64_t seed,
                                     size_t dimension, size_t* violations);

/* ---------------------------------------------------- experiment interface */

/* Typed key = value configuration shared by every experiment command. */
typedef struct qq_config qq_config;

QQSTAB_API qq_status qq_config_new(qq_config** out);
/* Loads `key = value` lines ('#' starts a comment line). */
QQSTAB_API qq_status qq_config_load(qq_config* cfg, const char* path);
QQSTAB_API qq_status qq_config_set(qq_config* cfg, const char* key,
                                   const char* value);
QQSTAB_API void qq_config_free(qq_config* cfg);

/* Key registry introspection (stable indices 0..count-1), so front ends can
 * generate one option per key. */
QQSTAB_API size_t qq_config_key_count(void);
QQSTAB_API const char* qq_config_key_name(size_t i);
QQSTAB_API const char* qq_config_key_default(size_t i);
QQSTAB_API const char* qq_config_key_help(size_t i);

/* Runs one experiment command: "check-solution", "recover", "verify-bounds",
 * "axioms", or "tnorm-tail". Reports are written as CSV files into the
 * configured output directory (`out` key, else $QQSTAB_OUT_DIR, else ".").
 *
 * `exit_code` receives the command verdict:
 *   0 success, 1 check violated / not converged / bound failed,
 *   2 configuration error or unknown command, 3 overflow-guard truncation,
 *   4 perturbation hypothesis not satisfied.
 * `summary` (optional) receives a one-line NUL-terminated description,
 * truncated to summary_len. The call itself returns QQ_OK whenever the
 * command executed, regardless of the verdict. */
QQSTAB_API qq_status qq_run(const qq_config* cfg, const char* command,
                            int* exit_code, char* summary, size_t summary_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QQSTAB_H */
