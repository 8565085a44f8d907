// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "hrris/hrris.h"

#include <exception>
#include <new>
#include <string>

#include "common/error.hpp"
#include "experiment/config.hpp"
#include "experiment/csv.hpp"
#include "experiment/runner.hpp"

namespace ex = hrris::experiment;

struct hrris_experiment {
  ex::ExperimentSpec spec;
  std::string description;
};

struct hrris_result {
  ex::SweepResult result;
};

namespace {

thread_local std::string g_last_error;

hrris_status status_of(hrris::ErrorCode code) {
  using hrris::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotUnit:
    case ErrorCode::InvalidDistance:
    case ErrorCode::NonPositivePower:
      return HRRIS_ERR_INVALID_ARGUMENT;
    case ErrorCode::ConfigError: return HRRIS_ERR_CONFIG;
    case ErrorCode::IoError: return HRRIS_ERR_IO;
    case ErrorCode::SingularMatrix: return HRRIS_ERR_SINGULAR;
    case ErrorCode::NonPositiveDeterminant: return HRRIS_ERR_NUMERIC;
    case ErrorCode::SearchSpaceTooLarge: return HRRIS_ERR_SEARCH_TOO_LARGE;
    case ErrorCode::PowerExhausted: return HRRIS_ERR_POWER_EXHAUSTED;
  }
  return HRRIS_ERR_INTERNAL;
}

template <typename F>
hrris_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HRRIS_OK;
  } catch (const hrris::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HRRIS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HRRIS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return HRRIS_ERR_INTERNAL;
  }
}

hrris_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return HRRIS_ERR_INVALID_ARGUMENT;
}

hrris_status make_experiment(ex::ExperimentSpec spec, hrris_experiment** out) {
  *out = new hrris_experiment{std::move(spec), {}};
  return HRRIS_OK;
}

}  // namespace

extern "C" {

const char* hrris_version(void) { return ex::kVersion; }

const char* hrris_status_string(hrris_status status) {
  switch (status) {
    case HRRIS_OK: return "ok";
    case HRRIS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HRRIS_ERR_CONFIG: return "configuration error";
    case HRRIS_ERR_IO: return "i/o error";
    case HRRIS_ERR_SINGULAR: return "singular matrix";
    case HRRIS_ERR_NUMERIC: return "numeric failure";
    case HRRIS_ERR_SEARCH_TOO_LARGE: return "search space too large";
    case HRRIS_ERR_POWER_EXHAUSTED: return "power budget exhausted";
    case HRRIS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hrris_last_error(void) { return g_last_error.c_str(); }

const char* hrris_preset_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : ex::preset_names()) s += n + "\n";
    return s;
  }();
  return names.c_str();
}

hrris_status hrris_experiment_from_preset(const char* figure_id, hrris_experiment** out) {
  if (!figure_id) return null_argument("figure_id");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { make_experiment(ex::preset(figure_id), out); });
}

hrris_status hrris_experiment_from_config_file(const char* path, hrris_experiment** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { make_experiment(ex::load_config_file(path), out); });
}

hrris_status hrris_experiment_from_config_text(const char* text, hrris_experiment** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { make_experiment(ex::parse_config_text(text), out); });
}

hrris_status hrris_experiment_set(hrris_experiment* exp, const char* key, const char* value) {
  if (!exp) return null_argument("experiment");
  if (!key || !value) return null_argument("key/value");
  return guarded([&] {
    ex::ExperimentSpec copy = exp->spec;
    if (!copy.set(key, value)) {
      hrris::fail(hrris::ErrorCode::ConfigError, std::string("unknown key '") + key + "'");
    }
    exp->spec = std::move(copy);
  });
}

const char* hrris_experiment_describe(hrris_experiment* exp) {
  if (!exp) return "";
  exp->description = exp->spec.to_config_text();
  return exp->description.c_str();
}

hrris_status hrris_experiment_validate(const hrris_experiment* exp) {
  if (!exp) return null_argument("experiment");
  return guarded([&] { exp->spec.validate(); });
}

void hrris_experiment_free(hrris_experiment* exp) { delete exp; }

hrris_status hrris_experiment_run(const hrris_experiment* exp, size_t threads,
                                  hrris_progress_fn progress, void* user,
                                  hrris_result** out) {
  if (!exp) return null_argument("experiment");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    ex::ProgressCallback cb;
    if (progress) cb = [progress, user](std::size_t done, std::size_t total) {
      progress(done, total, user);
    };
    auto* r = new hrris_result{ex::run_experiment(exp->spec, threads, cb)};
    *out = r;
  });
}

size_t hrris_result_row_count(const hrris_result* result) {
  return result ? result->result.rows.size() : 0;
}

hrris_status hrris_result_row(const hrris_result* result, size_t index, hrris_row* out) {
  if (!result) return null_argument("result");
  if (!out) return null_argument("out");
  if (index >= result->result.rows.size()) {
    g_last_error = "row index out of range";
    return HRRIS_ERR_INVALID_ARGUMENT;
  }
  const ex::ResultRow& r = result->result.rows[index];
  *out = hrris_row{r.scheme.c_str(), r.sweep_variable.c_str(), r.sweep_value, r.mean_se,
                   r.mean_power_w, r.mean_ee, r.trials, r.seed};
  g_last_error.clear();
  return HRRIS_OK;
}

size_t hrris_result_scheme_count(const hrris_result* result) {
  return result ? result->result.spec.schemes.size() : 0;
}

size_t hrris_result_point_count(const hrris_result* result) {
  return result ? result->result.spec.sweep_values.size() : 0;
}

size_t hrris_result_trial_count(const hrris_result* result) {
  return result ? result->result.spec.trials : 0;
}

hrris_status hrris_result_trial(const hrris_result* result, size_t scheme_index,
                                size_t point_index, size_t trial, hrris_trial* out) {
  if (!result) return null_argument("result");
  if (!out) return null_argument("out");
  return guarded([&] {
    const ex::TrialRecord& r = result->result.record(scheme_index, point_index, trial);
    *out = hrris_trial{r.scheme, r.point, r.trial, r.attempt, r.spectral_efficiency,
                       r.upper_bound, r.power_w, r.energy_efficiency, r.active_power_w,
                       r.active_count, r.sweeps, r.converged ? 1 : 0};
  });
}

size_t hrris_result_resampled_draws(const hrris_result* result) {
  return result ? result->result.resampled_draws : 0;
}

hrris_status hrris_result_write_csv(const hrris_result* result, const char* path) {
  if (!result) return null_argument("result");
  if (!path) return null_argument("path");
  return guarded([&] { ex::write_csv(result->result, path); });
}

hrris_status hrris_result_write_manifest(const hrris_result* result, const char* path) {
  if (!result) return null_argument("result");
  if (!path) return null_argument("path");
  return guarded([&] { ex::write_manifest(result->result, path); });
}

void hrris_result_free(hrris_result* result) { delete result; }

}  // extern "C"
