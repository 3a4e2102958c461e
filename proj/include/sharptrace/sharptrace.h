#ifndef SHARPTRACE_H
#define SHARPTRACE_H

/* C interface to the sharptrace library.
 *
 * Every function returns an st_status. On failure the message is available
 * from st_last_error_message() on the same thread until the next call.
 * Strings returned through `char**` are owned by the caller and released with
 * st_free_string(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ST_API __attribute__((visibility("default")))
#else
#define ST_API
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_ERR_USAGE = 1,       /* malformed request, bad argument or null pointer */
  ST_ERR_DOMAIN = 2,      /* parameters outside the mathematical domain */
  ST_ERR_UNSUPPORTED = 3, /* valid input in a regime that is not evaluated */
  ST_ERR_CONVERGENCE = 4,
  ST_ERR_STRUCTURAL = 5,  /* an internal invariant failed */
  ST_ERR_ACCURACY = 6,    /* a numeric target could not be met */
  ST_ERR_IO = 7,
  ST_ERR_INTERNAL = 8
} st_status;

typedef enum st_format { ST_FORMAT_JSON = 0, ST_FORMAT_CSV = 1, ST_FORMAT_TEXT = 2 } st_format;

typedef struct st_report st_report; /* opaque */

typedef struct st_suite_config {
  const char* suite; /* "specfun", "ball", "halfspace", "inequality" or "all" */
  int n_min;
  int n_max;
  int m_min;
  int m_max; /* negative: no bound beyond 2m+1 < n */
  int l_max;
  int quad_order;
  int truncation;
  int exact;   /* nonzero to run exact checks */
  int numeric; /* nonzero to run numeric checks */
  int workers; /* 0: SHARPTRACE_WORKERS, else hardware concurrency */
  int timestamp;
} st_suite_config;

typedef struct st_summary {
  int pass;
  int fail;
  int flagged;
} st_summary;

ST_API const char* st_version(void);
/* Message of the last failed call on this thread, "" if none. */
ST_API const char* st_last_error_message(void);
ST_API void st_free_string(char* s);

/* Fills the defaults: suite "all", n in [4, 7], l_max 8, quadrature order
 * 200, truncation 40, both check kinds, timestamps on. */
ST_API st_status st_suite_config_init(st_suite_config* cfg);
ST_API st_status st_run_suite(const st_suite_config* cfg, st_report** out);
ST_API st_status st_report_render(const st_report* r, st_format format, char** out);
ST_API st_status st_report_summary(const st_report* r, st_summary* out);
/* 0 when no check failed, 1 otherwise. */
ST_API int st_report_exit_code(const st_report* r);
ST_API void st_report_free(st_report* r);

/* Single inequality evaluations, returned as a JSON document.
 * kind: "const", "extremal" or "perturbed"; exponent: "beckner" (the sharp
 * extremal power) or "printed"; amplitude and mode apply to perturbed data.
 * A null datum means the constant function. */
typedef struct st_datum {
  const char* kind;
  double x0;
  double amplitude;
  int mode;
  const char* exponent;
} st_datum;

ST_API st_status st_ineq_trace(int n, int m, const st_datum* datum, int quad_order, int truncation, char** json_out);
ST_API st_status st_ineq_lebedev_milin(int n, const st_datum* datum, int quad_order, int truncation,
                                       char** json_out);
ST_API st_status st_ineq_halfspace(int n, int m, double sigma, char** json_out);

/* CSV table rho, psi_gamma, conformal factor at rho_i = 0.5 (i+1)/samples. */
ST_API st_status st_metric_table(int n, double gamma, int samples, char** csv_out);

ST_API st_status st_hyp2f1(double a, double b, double c, double z, double* out);
ST_API st_status st_gegenbauer(double alpha, int k, double t, double* out);
ST_API st_status st_gjms_symbol(int n, double gamma, int l, double* out);
ST_API st_status st_adapted_metric_factor(int n, double gamma, double rho, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SHARPTRACE_H */
