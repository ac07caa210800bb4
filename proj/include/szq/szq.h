#ifndef SZQ_SZQ_H
#define SZQ_SZQ_H

/* C interface to the positive unit-circle quadrature library.
 * All handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Functions return SZQ_OK or an error
 * status; szq_last_error() then holds a message for the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(SZQ_BUILDING_LIBRARY)
#define SZQ_API __declspec(dllexport)
#else
#define SZQ_API __declspec(dllimport)
#endif
#else
#define SZQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum szq_status {
  SZQ_OK = 0,
  SZQ_ERR_INVALID_ARGUMENT,
  SZQ_ERR_INVALID_COEFFICIENTS,
  SZQ_ERR_INVALID_DEGREE,
  SZQ_ERR_ZEROS_NOT_IN_DISK,
  SZQ_ERR_NOT_POSITIVE_DEFINITE,
  SZQ_ERR_INSUFFICIENT_RESOLUTION,
  SZQ_ERR_INSUFFICIENT_MOMENTS,
  SZQ_ERR_INVALID_MEASURE,
  SZQ_ERR_UNSUPPORTED_VARIANT,
  SZQ_ERR_ARITY_MISMATCH,
  SZQ_ERR_INTERNAL_CONSISTENCY,
  SZQ_ERR_NODE_COUNT,
  SZQ_ERR_POSITIVITY_VIOLATION,
  SZQ_ERR_DEGENERATE_SPEC,
  SZQ_ERR_LOG_SINGULARITY,
  SZQ_ERR_SYMMETRY_VIOLATION,
  SZQ_ERR_PARSE,
  SZQ_ERR_UNKNOWN
} szq_status;

typedef struct szq_complex {
  double re;
  double im;
} szq_complex;

typedef struct szq_measure szq_measure;
typedef struct szq_rule szq_rule;
typedef struct szq_interval_rule szq_interval_rule;

SZQ_API const char* szq_last_error(void);
SZQ_API const char* szq_status_name(szq_status status);

/* ---- measures ---- */

SZQ_API szq_status szq_measure_lebesgue(szq_measure** out);
SZQ_API szq_status szq_measure_bernstein_szego(const szq_complex* roots, size_t count,
                                               szq_measure** out);
SZQ_API szq_status szq_measure_geronimus(szq_complex a, szq_measure** out);
SZQ_API szq_status szq_measure_verblunsky(const szq_complex* alphas, size_t count,
                                          szq_measure** out);
SZQ_API szq_status szq_measure_moments(const szq_complex* moments, size_t count,
                                       szq_measure** out);
SZQ_API szq_status szq_measure_density(const double* samples, size_t count, szq_measure** out);
/* Power moments int x^k dpsi of a measure on [-1, 1], k = 0..count-1. */
SZQ_API szq_status szq_measure_interval(const double* power_moments, size_t count,
                                        szq_measure** out);
/* lebesgue | bernstein-szego:<re,im;...> | geronimus:<re,im> | verblunsky:<re,im;...> |
 * moments:<path> | density:<path> | interval-moments:<path> */
SZQ_API szq_status szq_measure_parse(const char* text, szq_measure** out);
SZQ_API void szq_measure_free(szq_measure* measure);

/* Valid until the handle is freed. */
SZQ_API const char* szq_measure_id(const szq_measure* measure);
SZQ_API szq_status szq_measure_has_density(const szq_measure* measure, int* out);
/* Writes c_0..c_n (n + 1 values). */
SZQ_API szq_status szq_measure_get_moments(const szq_measure* measure, size_t n, szq_complex* out);
SZQ_API szq_status szq_measure_get_verblunsky(const szq_measure* measure, size_t count,
                                              szq_complex* out);
SZQ_API szq_status szq_measure_eval_density(const szq_measure* measure, double phi, double* out);

/* Two-call pattern: pass out = NULL to learn the count. */
SZQ_API szq_status szq_read_interval_moments(const char* path, double* out, size_t capacity,
                                             size_t* count);

/* ---- rules ---- */

SZQ_API szq_status szq_rule_generate(const szq_measure* measure, size_t n, size_t m,
                                     const szq_complex* tail, size_t tail_len, szq_complex eta,
                                     szq_rule** out);
/* eta_sign must be +1 or -1; the tail is real. */
SZQ_API szq_status szq_rule_generate_symmetric(const szq_measure* measure, size_t n, size_t m,
                                               const double* tail, size_t tail_len, int eta_sign,
                                               szq_rule** out);
/* The eta placing a node at phi0. */
SZQ_API szq_status szq_eta_for_node(const szq_measure* measure, size_t n, size_t m,
                                    const szq_complex* tail, size_t tail_len, double phi0,
                                    szq_complex* out);
/* Wraps given nodes (strictly increasing in [0, 2pi)) and weights. */
SZQ_API szq_status szq_rule_create(const double* nodes, const double* weights, size_t n, size_t m,
                                   szq_rule** out);
/* JSON or CSV rule file. m_override < 0 keeps the file's m (0 for CSV). */
SZQ_API szq_status szq_rule_read_file(const char* path, long m_override, szq_rule** out);
SZQ_API void szq_rule_free(szq_rule* rule);

SZQ_API size_t szq_rule_size(const szq_rule* rule);
SZQ_API size_t szq_rule_m(const szq_rule* rule);
SZQ_API szq_complex szq_rule_eta(const szq_rule* rule);
SZQ_API void szq_rule_nodes(const szq_rule* rule, double* out);
SZQ_API void szq_rule_weights(const szq_rule* rule, double* out);

/* ---- validation ---- */

/* 1e-10 * n * max_k |c_k| over k <= k_probe. */
SZQ_API szq_status szq_default_tolerance(const szq_rule* rule, const szq_measure* measure,
                                         size_t k_probe, double* out);
/* errors may be NULL, otherwise k_probe + 1 entries. tol <= 0 picks the default. */
SZQ_API szq_status szq_rule_exactness(const szq_rule* rule, const szq_measure* measure,
                                      size_t k_probe, double tol, double* errors,
                                      long* precise_degree);
SZQ_API szq_status szq_rule_caratheodory(const szq_rule* rule, const szq_measure* measure,
                                         double* max_error, int* zeros_in_disk);
SZQ_API szq_status szq_rule_orthogonality(const szq_rule* rule, const szq_measure* measure,
                                          double* max_violation);
SZQ_API szq_status szq_rule_interlacing(const szq_rule* rule, const szq_measure* measure,
                                        size_t l, szq_complex kappa, size_t* violations);

typedef struct szq_s_summary {
  double max_s_minus_r;
  double max_weight_recovery;
  size_t separation_violations;
  size_t skipped_samples;
  size_t samples;
  int node_first;
} szq_s_summary;

/* 8n samples. Needs n >= 2 and m <= n/2 - 1 (SZQ_ERR_INVALID_ARGUMENT otherwise). */
SZQ_API szq_status szq_rule_s_function(const szq_rule* rule, const szq_measure* measure,
                                       szq_s_summary* out);

typedef struct szq_sweep_row {
  size_t n;
  double max_asym_dev;
  long precise_degree;
} szq_sweep_row;

typedef enum szq_trend {
  SZQ_TREND_DECREASING = 0,
  SZQ_TREND_NONINCREASING,
  SZQ_TREND_ZERO,
  SZQ_TREND_NOT_MONOTONE
} szq_trend;

/* Rules with fixed m (clamped to n-1) and every tail entry equal to tail_value. */
SZQ_API szq_status szq_asymptotic_sweep(const szq_measure* measure, const size_t* n_list,
                                        size_t count, size_t m, szq_complex tail_value,
                                        szq_complex eta, szq_sweep_row* rows);
SZQ_API szq_trend szq_sweep_trend(const szq_sweep_row* rows, size_t count);
SZQ_API const char* szq_trend_name(szq_trend trend);

/* ---- interval ---- */

SZQ_API szq_status szq_rule_to_interval(const szq_rule* rule, szq_interval_rule** out);
SZQ_API void szq_interval_rule_free(szq_interval_rule* rule);
SZQ_API size_t szq_interval_rule_size(const szq_interval_rule* rule);
SZQ_API size_t szq_interval_rule_degree(const szq_interval_rule* rule);
SZQ_API void szq_interval_rule_x(const szq_interval_rule* rule, double* out);
SZQ_API void szq_interval_rule_lambda(const szq_interval_rule* rule, double* out);
SZQ_API szq_status szq_interval_exactness(const szq_interval_rule* rule,
                                          const double* power_moments, size_t count,
                                          size_t degree, double* max_error);

#ifdef __cplusplus
}
#endif

#endif /* SZQ_SZQ_H */
