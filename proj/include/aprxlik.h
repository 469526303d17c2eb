/* aprxlik: approximate-likelihood inference diagnostics.
 *
 * C interface to the shared library. All functions return a status code;
 * on failure, aprxlik_last_error() gives a thread-local message describing
 * the most recent error in the calling thread. Objects returned through
 * out-parameters are opaque handles owned by the caller and released with
 * the matching *_free function.
 */
#ifndef APRXLIK_H
#define APRXLIK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APRXLIK_API __declspec(dllexport)
#else
#define APRXLIK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aprxlik_status {
    APRXLIK_OK = 0,
    APRXLIK_ERR_INVALID_ARGUMENT = 1,
    APRXLIK_ERR_DOMAIN = 2,
    APRXLIK_ERR_NUMERIC = 3,
    APRXLIK_ERR_SIZE_CAP = 4,
    APRXLIK_ERR_IO = 5,
    APRXLIK_ERR_SELFTEST_FAILED = 6
} aprxlik_status;

APRXLIK_API const char* aprxlik_version(void);

/* Message for the most recent failing call in this thread; empty string if
 * no failure has occurred. The pointer stays valid until the next failing
 * call in the same thread. */
APRXLIK_API const char* aprxlik_last_error(void);

/* ---- one-shot Ising normalizing constants ------------------------------- */

/* boundary: "free" | "periodic"; method: "brute" | "transfer" | "kaufman" |
 * "rda" (rda uses strip level k; other methods ignore k). */
APRXLIK_API aprxlik_status aprxlik_ising_log_z(int rows, int cols, double alpha, double beta, const char* boundary,
                                               const char* method, int k, double* out_log_z);

/* b_beta = 2 acosh{-1 + cosh(2 beta)^2 / sinh(2 beta)}, for 0 < beta < beta_c. */
APRXLIK_API aprxlik_status aprxlik_b_beta(double beta, double* out_b);

/* ---- opaque likelihood surfaces ----------------------------------------- */

typedef struct aprxlik_dataset aprxlik_dataset;
typedef struct aprxlik_surface aprxlik_surface;

/* Two-level binomial-logit dataset simulated from the generative model. */
APRXLIK_API aprxlik_status aprxlik_twolevel_simulate(int n, int m, double theta0, uint64_t seed,
                                                     aprxlik_dataset** out);
APRXLIK_API void aprxlik_dataset_free(aprxlik_dataset* d);
/* Copies item counts y_1..y_n into caller storage of capacity len. */
APRXLIK_API aprxlik_status aprxlik_dataset_items(const aprxlik_dataset* d, int* out_y, size_t len);

/* method: "laplace" | "quadrature" (20-node adaptive Gauss-Hermite). */
APRXLIK_API aprxlik_status aprxlik_twolevel_surface(const aprxlik_dataset* d, const char* method,
                                                    aprxlik_surface** out);

/* 1-D Ising surface in beta with alpha held fixed, given observed sufficient
 * statistics; method as in aprxlik_ising_log_z plus "rda" with level k. */
APRXLIK_API aprxlik_status aprxlik_ising_surface(int rows, int cols, const char* boundary, const char* method, int k,
                                                 long v0, long v1, double alpha_fixed, aprxlik_surface** out);

APRXLIK_API void aprxlik_surface_free(aprxlik_surface* s);

/* Log-likelihood, finite-difference score and observed information. Any of
 * the out-pointers may be NULL. */
APRXLIK_API aprxlik_status aprxlik_surface_eval(const aprxlik_surface* s, double theta, double* out_loglik,
                                                double* out_score, double* out_obs_info);

APRXLIK_API aprxlik_status aprxlik_surface_maximize(const aprxlik_surface* s, double theta_init, double tol,
                                                    double* out_theta_hat, int* out_converged);

/* Likelihood-ratio interval at the given level; out_truncated (may be NULL)
 * is set to 1 when an endpoint hit the domain edge. */
APRXLIK_API aprxlik_status aprxlik_surface_lr_interval(const aprxlik_surface* s, double theta_hat, double level,
                                                       double* out_lo, double* out_hi, int* out_truncated);

/* ---- experiments --------------------------------------------------------- */

/* name: "twolevel-figure" | "ising-bbeta" | "ising-contour" |
 * "ising-trapezium". config_json may be NULL for the desk-scale defaults;
 * has_seed/threads override the config when nonzero. CSV outputs are written
 * under out_dir. */
APRXLIK_API aprxlik_status aprxlik_run_experiment(const char* name, const char* config_json, uint64_t seed,
                                                  int has_seed, int threads, const char* out_dir);

/* Oracle-equivalence smoke suite; prints one line per check to stdout when
 * verbose is nonzero. */
APRXLIK_API aprxlik_status aprxlik_selftest(int verbose);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* APRXLIK_H */
