// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_EXPERIMENT_RUNNER_HPP
#define HRRIS_EXPERIMENT_RUNNER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "channel/channel_model.hpp"
#include "common/rng.hpp"
#include "experiment/config.hpp"

namespace hrris::experiment {

/// Outcome of one scheme on one channel realization.
struct TrialRecord {
  std::size_t scheme = 0;  // index into ExperimentSpec::schemes
  std::size_t point = 0;   // index into ExperimentSpec::sweep_values
  std::size_t trial = 0;
  std::size_t attempt = 0;  // > 0 when earlier draws were singular

  double spectral_efficiency = 0.0;
  double upper_bound = 0.0;
  double power_w = 0.0;
  double energy_efficiency = 0.0;
  double active_power_w = 0.0;
  std::size_t active_count = 0;
  std::size_t sweeps = 0;
  bool converged = true;
};

/// One averaged CSV row.
struct ResultRow {
  std::string scheme;
  std::string sweep_variable;
  double sweep_value = 0.0;
  double mean_se = 0.0;
  double mean_power_w = 0.0;
  double mean_ee = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct SweepResult {
  ExperimentSpec spec;
  std::vector<ResultRow> rows;        // scheme-major, then sweep value
  std::vector<TrialRecord> records;   // same order, trials innermost
  std::size_t resampled_draws = 0;

  const TrialRecord& record(std::size_t scheme, std::size_t point, std::size_t trial) const;
};

/// Streams for one (seed, trial, attempt). Every scheme and sweep value of
/// a trial draws from the same pair, which keeps comparisons paired.
struct TrialStreams {
  RngStream channel;
  RngStream init;
};

TrialStreams trial_streams(std::uint64_t seed, std::size_t trial, std::size_t attempt);

/// Draws the channel pair of `scenario` from `streams`.
channel::ChannelPair trial_channels(const ScenarioConfig& scenario, const TrialStreams& streams);

/// Solves one scheme on given channels and evaluates SE, power and EE.
TrialRecord evaluate_scheme(SchemeKind kind, const ScenarioConfig& scenario,
                            const channel::ChannelPair& channels,
                            const TrialStreams& streams);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every (scheme, sweep value, trial) cell on `threads` workers
/// (0 picks the experiment's thread count, then the hardware concurrency).
/// Output does not depend on thread count or scheme order.
SweepResult run_experiment(const ExperimentSpec& spec, std::size_t threads = 0,
                           const ProgressCallback& progress = {});

/// Draw attempts per cell before a numeric failure is reported.
inline constexpr std::size_t kMaxDrawAttempts = 16;

}  // namespace hrris::experiment

#endif  // HRRIS_EXPERIMENT_RUNNER_HPP
