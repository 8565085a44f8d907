/* SPDX-License-Identifier: Apache-2.0
 *
 * hrris-sim: hybrid relay-reflecting surface link simulator
 * Copyright (C) 2026 hrris-sim developers
 *
 * Stable C interface. Every function returning hrris_status leaves a
 * human-readable message in hrris_last_error() on failure. Handles are
 * opaque and owned by the caller until passed to the matching _free.
 */

#ifndef HRRIS_HRRIS_H
#define HRRIS_HRRIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HRRIS_BUILDING_LIBRARY)
#    define HRRIS_API __declspec(dllexport)
#  else
#    define HRRIS_API __declspec(dllimport)
#  endif
#else
#  define HRRIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hrris_status {
  HRRIS_OK = 0,
  HRRIS_ERR_INVALID_ARGUMENT = 1,
  HRRIS_ERR_CONFIG = 2,
  HRRIS_ERR_IO = 3,
  HRRIS_ERR_SINGULAR = 4,
  HRRIS_ERR_NUMERIC = 5,
  HRRIS_ERR_SEARCH_TOO_LARGE = 6,
  HRRIS_ERR_POWER_EXHAUSTED = 7,
  HRRIS_ERR_INTERNAL = 8
} hrris_status;

typedef struct hrris_experiment hrris_experiment;
typedef struct hrris_result hrris_result;

/* One averaged output row. `scheme` and `sweep_variable` point into the
 * result and stay valid until hrris_result_free. */
typedef struct hrris_row {
  const char* scheme;
  const char* sweep_variable;
  double sweep_value;
  double mean_se_bpshz;
  double mean_power_w;
  double mean_ee_bpj;
  size_t trials;
  uint64_t seed;
} hrris_row;

/* One scheme on one channel realization. */
typedef struct hrris_trial {
  size_t scheme_index;
  size_t point_index;
  size_t trial;
  size_t attempt;
  double spectral_efficiency;
  double upper_bound;
  double power_w;
  double energy_efficiency;
  double active_power_w;
  size_t active_count;
  size_t sweeps;
  int converged;
} hrris_trial;

typedef void (*hrris_progress_fn)(size_t done, size_t total, void* user);

HRRIS_API const char* hrris_version(void);
HRRIS_API const char* hrris_status_string(hrris_status status);
/* Message of the last failed call on this thread; "" if none. */
HRRIS_API const char* hrris_last_error(void);

/* Newline-separated preset names. */
HRRIS_API const char* hrris_preset_names(void);

HRRIS_API hrris_status hrris_experiment_from_preset(const char* figure_id,
                                                    hrris_experiment** out);
HRRIS_API hrris_status hrris_experiment_from_config_file(const char* path,
                                                         hrris_experiment** out);
HRRIS_API hrris_status hrris_experiment_from_config_text(const char* text,
                                                         hrris_experiment** out);
/* Any config key, e.g. "trials", "seed", "schemes", "sweep_values", "k". */
HRRIS_API hrris_status hrris_experiment_set(hrris_experiment* exp, const char* key,
                                            const char* value);
/* Config text of the experiment; valid until the next call on `exp`. */
HRRIS_API const char* hrris_experiment_describe(hrris_experiment* exp);
HRRIS_API hrris_status hrris_experiment_validate(const hrris_experiment* exp);
HRRIS_API void hrris_experiment_free(hrris_experiment* exp);

/* threads == 0 uses the experiment's thread setting, then all cores. */
HRRIS_API hrris_status hrris_experiment_run(const hrris_experiment* exp, size_t threads,
                                            hrris_progress_fn progress, void* user,
                                            hrris_result** out);

HRRIS_API size_t hrris_result_row_count(const hrris_result* result);
HRRIS_API hrris_status hrris_result_row(const hrris_result* result, size_t index,
                                        hrris_row* out);
HRRIS_API size_t hrris_result_scheme_count(const hrris_result* result);
HRRIS_API size_t hrris_result_point_count(const hrris_result* result);
HRRIS_API size_t hrris_result_trial_count(const hrris_result* result);
HRRIS_API hrris_status hrris_result_trial(const hrris_result* result, size_t scheme_index,
                                          size_t point_index, size_t trial,
                                          hrris_trial* out);
HRRIS_API size_t hrris_result_resampled_draws(const hrris_result* result);
HRRIS_API hrris_status hrris_result_write_csv(const hrris_result* result, const char* path);
HRRIS_API hrris_status hrris_result_write_manifest(const hrris_result* result,
                                                   const char* path);
HRRIS_API void hrris_result_free(hrris_result* result);

#ifdef __cplusplus
}
#endif

#endif /* HRRIS_HRRIS_H */
