/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The dblgamma Authors
 *
 * C interface to the dblgamma library. Every function returns a dg_status;
 * on failure a message is available from dg_last_error() on the calling
 * thread until the next failing call. Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function. Strings
 * returned through handles live as long as the handle.
 */
#ifndef DBLGAMMA_H_
#define DBLGAMMA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DG_BUILDING_LIBRARY)
#define DG_API __attribute__((visibility("default")))
#else
#define DG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dg_status {
  DG_OK = 0,
  DG_ERR_DOMAIN = 1,           /* argument outside the function's domain */
  DG_ERR_POLE = 2,             /* s too close to 1 */
  DG_ERR_NON_FINITE = 3,       /* a series term or integrand was not finite */
  DG_ERR_CAPACITY = 4,         /* request beyond a hard cap */
  DG_ERR_UNKNOWN_ID = 5,       /* unknown function, constant or identity */
  DG_ERR_INVALID_ARGUMENT = 6, /* bad options, grid, arity or null pointer */
  DG_ERR_INTERNAL = 7
} dg_status;

DG_API const char* dg_status_string(dg_status status);
DG_API const char* dg_last_error(void);
DG_API const char* dg_version(void);

/* Evaluation options. A null dg_options pointer means the defaults:
 * abs_tol 1e-12, rel_tol 0, max_terms 1e6, tail_order 4, consecutive_small 3. */
typedef struct dg_options dg_options;

DG_API dg_status dg_options_create(dg_options** out);
DG_API void dg_options_destroy(dg_options* opts);
DG_API dg_status dg_options_set_abs_tol(dg_options* opts, double abs_tol);
DG_API dg_status dg_options_set_rel_tol(dg_options* opts, double rel_tol);
DG_API dg_status dg_options_set_max_terms(dg_options* opts, uint64_t max_terms);
DG_API dg_status dg_options_set_tail_order(dg_options* opts, int tail_order);
DG_API dg_status dg_options_set_consecutive_small(dg_options* opts, int consecutive_small);

typedef struct dg_series_value {
  double value;
  double err_estimate;
  uint64_t terms_used;
  int converged;
} dg_series_value;

/* Evaluates a named function:
 *   loggamma x | digamma x | logbarnes x (log G(1+x)) | hurwitz s x |
 *   hurwitz-ds s x | hurwitz-dss s x | clausen2 theta */
DG_API dg_status dg_eval(const dg_options* opts, const char* function, const double* args,
                         size_t nargs, dg_series_value* out);
/* Number of arguments `function` takes, or -1 when unknown. */
DG_API int dg_eval_arity(const char* function);

/* Named constants: gamma | zeta-prime-0 | zeta-prime-m1 | log-g-half.
 * `provenance` (optional) receives a static description of how the value was
 * computed. */
DG_API dg_status dg_constant(const dg_options* opts, const char* name, dg_series_value* out,
                             const char** provenance);

/* Exact Bernoulli polynomial coefficients, ascending powers, as "p/q". */
typedef struct dg_bernoulli dg_bernoulli;

DG_API dg_status dg_bernoulli_create(int m, dg_bernoulli** out);
DG_API void dg_bernoulli_destroy(dg_bernoulli* poly);
DG_API size_t dg_bernoulli_size(const dg_bernoulli* poly);
DG_API const char* dg_bernoulli_coeff(const dg_bernoulli* poly, size_t i);

/* Identity registry. */
DG_API size_t dg_identity_count(void);
DG_API const char* dg_identity_id(size_t i);
DG_API const char* dg_identity_description(size_t i);

typedef struct dg_report_list dg_report_list;

/* Runs one identity, or every identity when id is "all". `grid` is null for
 * the default grid, or "start:stop:step", or a comma-separated list; a grid
 * is not accepted with "all". `tolerance` <= 0 keeps each row's own. */
DG_API dg_status dg_verify_run(const dg_options* opts, const char* id, const char* grid,
                               double tolerance, dg_report_list** out);
DG_API void dg_report_list_destroy(dg_report_list* list);
DG_API size_t dg_report_count(const dg_report_list* list);
/* 1 when every report passed. */
DG_API int dg_report_all_pass(const dg_report_list* list);

typedef struct dg_report_info {
  const char* id;
  const char* description;
  const char* param_name; /* "" when the row has no parameter */
  double max_abs_err;
  double tolerance;
  int pass;
  double wall_time;
  size_t point_count;
} dg_report_info;

typedef struct dg_point_info {
  const char* label; /* identity id, with "[n=2]" style suffix when parameterized */
  double input;
  double param;
  double lhs;
  double rhs;
  double abs_err; /* +inf when the point errored */
  const char* error; /* null unless the evaluation failed */
} dg_point_info;

DG_API dg_status dg_report_get(const dg_report_list* list, size_t i, dg_report_info* out);
DG_API dg_status dg_report_point(const dg_report_list* list, size_t i, size_t k,
                                 dg_point_info* out);

#ifdef __cplusplus
}
#endif

#endif /* DBLGAMMA_H_ */
