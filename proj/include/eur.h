/* C interface for the entropic-uncertainty toolkit: observable-set
 * construction, entropy-sum minimization, grid-oracle cross-checks,
 * literature-bound reports, the qutrit lower-bound surface, and the
 * saturating-state registry.
 *
 * Conventions: functions returning eur_status never throw or abort; on
 * failure they return a nonzero status and leave a message retrievable via
 * eur_last_error(). Strings returned through char** are heap-allocated and
 * must be released with eur_string_free(). Handles are opaque and freed with
 * their matching *_free function. */
#ifndef EUR_H
#define EUR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eur_status {
  EUR_OK = 0,
  EUR_ERR_INVALID = 1,    /* domain error: bad arguments or parameters */
  EUR_ERR_VALIDATION = 2, /* internal consistency check failed */
  EUR_ERR_NUMERIC = 3,    /* numerical guard tripped */
  EUR_ERR_IO = 4,         /* filesystem failure */
  EUR_ERR_INTERNAL = 5    /* unexpected failure */
} eur_status;

typedef struct eur_observable_set eur_observable_set;
typedef struct eur_result eur_result;

typedef struct eur_opt_config {
  int n_starts;          /* default 256 */
  int max_iters;         /* default 2000 */
  double value_tol;      /* default 1e-10 */
  double param_tol;      /* default 1e-9 */
  uint64_t seed;         /* default 12345 */
  double cluster_radius; /* default 1e-4 */
  int threads;           /* 0 = hardware concurrency */
} eur_opt_config;

/* Version of the record/report schema emitted by the *_json functions. */
const char* eur_schema_version(void);

/* Message for the most recent error on this thread (static storage; valid
 * until the next failing call on the same thread). */
const char* eur_last_error(void);

void eur_string_free(char* s);

void eur_opt_config_default(eur_opt_config* cfg);

/* --- observable sets --------------------------------------------------- */

/* spin: 1.0, 1.5 or 2.0; axes: subset of "x,y,z" (commas optional). */
eur_status eur_spin_set_create(double spin, const char* axes, eur_observable_set** out);

/* dim: 2..5. Either count >= 1 selects the first bases of the catalog, or
 * subset (1-based catalog indices, subset_len entries) picks them explicitly;
 * pass count = 0 when using subset. */
eur_status eur_mub_set_create(int dim, int count, const int* subset, size_t subset_len,
                              eur_observable_set** out);

void eur_set_free(eur_observable_set* set);
int eur_set_dim(const eur_observable_set* set);
int eur_set_size(const eur_observable_set* set);
eur_status eur_set_info_json(const eur_observable_set* set, char** json_out);

/* --- minimization ------------------------------------------------------ */

eur_status eur_minimize(const eur_observable_set* set, const eur_opt_config* cfg,
                        eur_result** out);
double eur_result_min(const eur_result* r);
int eur_result_warning(const eur_result* r);  /* 1 if convergence warning */
int eur_result_certified(const eur_result* r);
eur_status eur_result_json(const eur_result* r, char** json_out);
void eur_result_free(eur_result* r);

/* Re-clusters the minimizers of a result with a different fidelity radius;
 * returns the representative states as JSON. */
eur_status eur_result_clusters_json(const eur_result* r, double radius, char** json_out);

/* Exhaustive/coarse grid scan; see library docs for the d = 5 policy. */
eur_status eur_grid_oracle(const eur_observable_set* set, int resolution, double* min_out);

/* --- bounds and verification ------------------------------------------- */

/* Literature-bound report. Uses the built-in certified registry when the set
 * is covered; otherwise, when cfg is non-NULL, runs a fresh minimization to
 * supply the certified value. */
eur_status eur_bounds_json(const eur_observable_set* set, const eur_opt_config* cfg,
                           char** json_out);

/* Entropy sum of an explicit state (re/im of length dim); the vector is
 * normalized internally, zero vectors are rejected. */
eur_status eur_entropy_sum_state(const eur_observable_set* set, const double* re,
                                 const double* im, int dim, double* out);

/* Entropy sum of the state described by chart parameters (dim-1 angles in
 * [0, pi/2], dim-1 phases in [0, 2pi)). */
eur_status eur_verify_state(const eur_observable_set* set, const double* angles,
                            const double* phases, int n_each, double expected, double tol,
                            int* pass_out, double* value_out, double* residual_out);

/* Runs the saturating-state registry (name = NULL for all cases); returns
 * per-state rows as JSON and the number of failing rows. */
eur_status eur_verify_cases(const char* name, char** json_out, int* n_failed);

/* --- qutrit surface ----------------------------------------------------- */

eur_status eur_gamma(double omega_x, double omega_y, double* out);
eur_status eur_gamma_surface_csv(int resolution, char** csv_out);

/* --- catalogs ----------------------------------------------------------- */

eur_status eur_catalog_json(int dim, char** json_out);

#ifdef __cplusplus
}
#endif
#endif /* EUR_H */
