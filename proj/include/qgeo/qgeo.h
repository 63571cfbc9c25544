#ifndef QGEO_QGEO_H
#define QGEO_QGEO_H

/* C interface to the qubit geometry library. Every function returns a
 * status; on failure qgeo_last_error() describes it (per thread). Objects
 * handed out through out-parameters are owned by the caller and released
 * with the matching _free function. */

#include <stddef.h>

#if defined(_WIN32)
#define QGEO_API __declspec(dllexport)
#else
#define QGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgeo_status {
  QGEO_OK = 0,
  QGEO_INVALID_ARGUMENT,
  QGEO_ZERO_FIELD,
  QGEO_STEP_TOO_COARSE,
  QGEO_UNREACHABLE,
  QGEO_NEVER_REACHED,
  QGEO_GRID_TOO_COARSE,
  QGEO_DEGENERATE_EVOLUTION,
  QGEO_ZERO_HAMILTONIAN,
  QGEO_EIGENSTATE_SINGULARITY,
  QGEO_MISSING_FIELD_RATE,
  QGEO_ZERO_DURATION,
  QGEO_POINT_TRAJECTORY,
  QGEO_MAXIMAL_COMPLEXITY,
  QGEO_DEGENERATE_PAIR,
  QGEO_UNKNOWN_FIXTURE,
  QGEO_INVALID_CONFIG,
  QGEO_BUFFER_TOO_SMALL,
  QGEO_INTERNAL
} qgeo_status;

typedef enum qgeo_metric {
  QGEO_S0 = 0,
  QGEO_S,
  QGEO_TRAVEL_TIME,
  QGEO_ETA_GE,
  QGEO_ETA_SE_MIN,
  QGEO_ETA_SE_MAX,
  QGEO_ETA_SE_MEAN,
  QGEO_KAPPA2,
  QGEO_V_BAR,
  QGEO_V_MAX,
  QGEO_C,
  QGEO_L_C,
  QGEO_QUADRATURE_ERROR,
  QGEO_THETA_MIN,
  QGEO_THETA_MAX,
  QGEO_PHI_MIN,
  QGEO_PHI_MAX,
  QGEO_METRIC_COUNT
} qgeo_metric;

/* Columns of qgeo_report_trajectory_row. */
#define QGEO_TRAJECTORY_COLUMNS 11

typedef struct qgeo_report qgeo_report;
typedef struct qgeo_config qgeo_config;
typedef struct qgeo_sweep qgeo_sweep;

/* Error name such as "ZeroDuration". */
QGEO_API const char* qgeo_status_name(qgeo_status status);
/* Non-zero for input mistakes (bad arguments, config, fixture name). */
QGEO_API int qgeo_status_is_usage(qgeo_status status);
QGEO_API const char* qgeo_last_error(void);

QGEO_API size_t qgeo_fixture_count(void);
/* NULL when index is out of range. */
QGEO_API const char* qgeo_fixture_name(size_t index);
/* samples = 0 keeps the default grid. */
QGEO_API qgeo_status qgeo_fixture_run(const char* name, size_t samples, qgeo_report** out);

QGEO_API qgeo_status qgeo_config_load(const char* path, qgeo_config** out);
QGEO_API qgeo_status qgeo_config_parse(const char* text, qgeo_config** out);
QGEO_API void qgeo_config_free(qgeo_config* cfg);
/* Format named in the config, or NULL. */
QGEO_API const char* qgeo_config_format(const qgeo_config* cfg);
/* samples = 0 uses the config value, else the default. */
QGEO_API qgeo_status qgeo_config_run(const qgeo_config* cfg, size_t samples, qgeo_report** out);
/* threads = 0 picks the hardware concurrency. */
QGEO_API qgeo_status qgeo_config_sweep(const qgeo_config* cfg, size_t samples, unsigned threads,
                                       qgeo_sweep** out);

QGEO_API size_t qgeo_sweep_size(const qgeo_sweep* sweep);
QGEO_API double qgeo_sweep_alpha(const qgeo_sweep* sweep, size_t index);
/* Borrowed; valid until qgeo_sweep_free. */
QGEO_API const qgeo_report* qgeo_sweep_report(const qgeo_sweep* sweep, size_t index);
QGEO_API size_t qgeo_sweep_argmin(const qgeo_sweep* sweep);
QGEO_API void qgeo_sweep_free(qgeo_sweep* sweep);

/* NaN for an unknown metric. */
QGEO_API double qgeo_report_value(const qgeo_report* report, qgeo_metric metric);
/* JSON key of a metric, e.g. "eta_se_mean". */
QGEO_API const char* qgeo_metric_key(qgeo_metric metric);
QGEO_API const char* qgeo_report_name(const qgeo_report* report);
/* "area", "meridian", "parallel" or "point". */
QGEO_API const char* qgeo_report_shape(const qgeo_report* report);
QGEO_API size_t qgeo_report_pole_count(const qgeo_report* report);
QGEO_API double qgeo_report_pole_time(const qgeo_report* report, size_t index);
/* Zero for reports taken from a sweep. */
QGEO_API size_t qgeo_report_trajectory_size(const qgeo_report* report);
/* t, re c0, im c0, re c1, im c1, x, y, z, theta_u, phi_u, v_instant */
QGEO_API qgeo_status qgeo_report_trajectory_row(const qgeo_report* report, size_t index,
                                                double row[QGEO_TRAJECTORY_COLUMNS]);
QGEO_API void qgeo_report_free(qgeo_report* report);

/* Writes a closed form like "pi/(4*sqrt(2))" into buf (NUL-terminated).
 * Returns the length needed without the NUL; 0 when no closed form fits. */
QGEO_API size_t qgeo_symbolic(double value, char* buf, size_t len);

#ifdef __cplusplus
}
#endif

#endif
