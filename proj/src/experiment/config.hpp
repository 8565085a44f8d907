// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_EXPERIMENT_CONFIG_HPP
#define HRRIS_EXPERIMENT_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ao/solvers.hpp"
#include "channel/channel_model.hpp"
#include "power/power_model.hpp"
#include "surface/surface_model.hpp"

namespace hrris::experiment {

/// One simulated link. Powers are kept in the units users write them in.
struct ScenarioConfig {
  std::size_t n_t = 32;
  std::size_t n_r = 2;
  std::size_t n = 50;
  std::size_t k = 1;
  std::size_t n_x = 0;  // 0: ceil(sqrt(N))
  unsigned phase_bits = 2;

  double p_bs_dbm = 30.0;
  double p_a_max_dbm = 0.0;
  double sigma2_dbm = -80.0;

  double beta0_db = -30.0;
  double epsilon_t = 2.2;
  double epsilon_r = 2.8;
  double kappa_t = channel::kInfiniteKappa;
  double kappa_r = 0.0;

  double x_h = 51.0;
  double x_ms = 40.0;
  double y_ms = 2.0;

  std::optional<double> theta_bs;
  std::optional<double> theta_h;
  std::optional<double> phi_h;

  double p_bs_dynamic_dbm = 40.0;
  double p_bs_static_dbm = 35.0;
  double p_a_dynamic_dbm = 35.0;
  double p_a_static_dbm = 30.0;
  double p_passive_w = 5e-3;
  double p_switch_w = 5e-3;
  double tau_bs = 0.5;
  double tau_a = 0.5;
  double bandwidth_hz = 10e6;

  std::size_t max_sweeps = 50;
  double ao_tolerance = 1e-4;

  channel::GeometryConfig geometry() const;
  channel::FadingConfig fading() const;
  channel::ArrayGeometry arrays() const;
  surface::SystemParams system() const;
  power::PowerModelParams power_model() const;
  ao::AoOptions ao_options() const;

  /// Sets one scenario key from text. Returns false for unknown keys.
  bool set(const std::string& key, const std::string& value);
  /// key = value lines for every scenario key.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

enum class SchemeKind {
  RisRandom,
  RisAo,
  RisK,
  FixedHr,
  DynamicHr,
  Relay,
  ExhaustiveFixed,
  ExhaustiveDynamic,
};

/// A scheme token such as "dynamic_hr" or "fixed_hr:pa=-10:x_ms=100".
/// Overrides apply to the scenario before the sweep value.
struct SchemeSpec {
  std::string label;
  SchemeKind kind = SchemeKind::RisAo;
  std::vector<std::pair<std::string, std::string>> overrides;

  static SchemeSpec parse(const std::string& token);
};

const char* scheme_name(SchemeKind kind) noexcept;

enum class SweepVariable { PBsDbm, PaMaxDbm, K, N, SurfaceX };

const char* sweep_name(SweepVariable v) noexcept;
SweepVariable parse_sweep_variable(const std::string& name);

struct ExperimentSpec {
  std::string figure_id = "custom";
  std::vector<SchemeSpec> schemes;
  SweepVariable sweep_variable = SweepVariable::PBsDbm;
  std::vector<double> sweep_values;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 0;  // 0: hardware concurrency
  ScenarioConfig base;

  /// Scenario seen by `scheme` at one sweep point.
  ScenarioConfig resolve(const SchemeSpec& scheme, double sweep_value) const;
  /// Throws ConfigError for inconsistent scheme/dimension combinations.
  void validate() const;

  /// Accepts experiment keys (figure, schemes, sweep, sweep_values, trials,
  /// seed, threads) and every scenario key. Returns false for unknown keys.
  bool set(const std::string& key, const std::string& value);
  /// Config-file text that reproduces this spec.
  std::string to_config_text() const;
};

/// Named presets fig3 ... fig9.
std::vector<std::string> preset_names();
ExperimentSpec preset(const std::string& figure_id);

/// Flat "key = value" text; '#' starts a comment. A "figure" key, when
/// present, loads that preset first, so files may hold overrides only.
ExperimentSpec parse_config_text(const std::string& text);
ExperimentSpec load_config_file(const std::string& path);

/// Trial count used by --fast.
inline constexpr std::size_t kFastTrials = 25;

}  // namespace hrris::experiment

#endif  // HRRIS_EXPERIMENT_CONFIG_HPP
