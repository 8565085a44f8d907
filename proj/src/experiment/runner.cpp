// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "experiment/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ao/solvers.hpp"
#include "common/error.hpp"
#include "power/power_model.hpp"
#include "surface/surface_model.hpp"

namespace hrris::experiment {

const TrialRecord& SweepResult::record(std::size_t scheme, std::size_t point,
                                       std::size_t trial) const {
  const std::size_t points = spec.sweep_values.size();
  const std::size_t index = (scheme * points + point) * spec.trials + trial;
  if (scheme >= spec.schemes.size() || point >= points || trial >= spec.trials) {
    fail(ErrorCode::InvalidArgument, "trial record index out of range");
  }
  return records[index];
}

TrialStreams trial_streams(std::uint64_t seed, std::size_t trial, std::size_t attempt) {
  const RngStream cell = RngStream(seed).split(static_cast<std::uint64_t>(trial))
                             .split(static_cast<std::uint64_t>(attempt));
  return {cell.split("channel"), cell.split("init")};
}

channel::ChannelPair trial_channels(const ScenarioConfig& scenario, const TrialStreams& streams) {
  return channel::synthesize(scenario.geometry(), scenario.fading(), scenario.arrays(),
                             streams.channel);
}

namespace {

surface::SurfaceConfig surface_for(SchemeKind kind, const ScenarioConfig& s) {
  surface::SurfaceConfig c;
  c.n = s.n;
  c.k = s.k;
  c.p_a_max = power::dbm_to_watts(s.p_a_max_dbm);
  c.phase_bits = s.phase_bits;
  switch (kind) {
    case SchemeKind::RisRandom:
    case SchemeKind::RisAo:
      c.mode = surface::Mode::Ris;
      c.k = 0;
      break;
    case SchemeKind::RisK:
      c.mode = surface::Mode::Ris;
      c.n = s.k;
      c.k = 0;
      break;
    case SchemeKind::FixedHr:
    case SchemeKind::ExhaustiveFixed:
      c.mode = surface::Mode::FixedHr;
      break;
    case SchemeKind::DynamicHr:
    case SchemeKind::ExhaustiveDynamic:
      c.mode = surface::Mode::DynamicHr;
      break;
    case SchemeKind::Relay:
      c.mode = surface::Mode::Relay;
      c.n = s.k;
      break;
  }
  return c;
}

bool is_redrawable(const Error& e) {
  return e.code() == ErrorCode::SingularMatrix ||
         e.code() == ErrorCode::NonPositiveDeterminant;
}

}  // namespace

TrialRecord evaluate_scheme(SchemeKind kind, const ScenarioConfig& scenario,
                            const channel::ChannelPair& channels,
                            const TrialStreams& streams) {
  const surface::SurfaceConfig config = surface_for(kind, scenario);
  config.validate();
  const surface::SystemParams params = scenario.system();
  const ao::AoOptions options = scenario.ao_options();
  const bool leading = kind == SchemeKind::RisK || kind == SchemeKind::Relay;
  const channel::ChannelPair sub = leading ? channels.leading_elements(config.n) : channels;

  ao::SolveReport report;
  switch (kind) {
    case SchemeKind::RisRandom:
      report = ao::random_phase_baseline(sub, params, config, streams.init);
      break;
    case SchemeKind::RisAo:
    case SchemeKind::RisK:
    case SchemeKind::FixedHr:
    case SchemeKind::Relay:
      report = ao::solve_fixed(sub, params, config, streams.init, options);
      break;
    case SchemeKind::DynamicHr:
      report = ao::solve_dynamic(sub, params, config, streams.init, options);
      break;
    case SchemeKind::ExhaustiveFixed:
    case SchemeKind::ExhaustiveDynamic:
      report = ao::exhaustive_search(sub, params, config);
      break;
  }

  const power::PowerModelParams pm = scenario.power_model();
  power::PowerBreakdown consumption;
  switch (kind) {
    case SchemeKind::RisRandom:
    case SchemeKind::RisAo:
    case SchemeKind::RisK:
      consumption = power::power_ris(scenario.n_t, config.n, params.p_bs, pm);
      break;
    case SchemeKind::FixedHr:
    case SchemeKind::ExhaustiveFixed:
    case SchemeKind::Relay:
      consumption = power::power_fixed(scenario.n_t, config.k, config.n - config.k,
                                       params.p_bs, report.active_power, pm);
      break;
    case SchemeKind::DynamicHr:
    case SchemeKind::ExhaustiveDynamic:
      consumption = power::power_dynamic(scenario.n_t, config.n, report.active_count,
                                         params.p_bs, report.active_power, pm);
      break;
  }

  TrialRecord r;
  r.spectral_efficiency = report.spectral_efficiency;
  r.upper_bound = report.upper_bound;
  r.power_w = consumption.total;
  r.energy_efficiency = power::energy_efficiency(report.spectral_efficiency, consumption.total, pm);
  r.active_power_w = report.active_power;
  r.active_count = report.active_count;
  r.sweeps = report.sweeps;
  r.converged = report.converged;
  return r;
}

SweepResult run_experiment(const ExperimentSpec& spec, std::size_t threads,
                           const ProgressCallback& progress) {
  spec.validate();
  SweepResult result;
  result.spec = spec;

  const std::size_t schemes = spec.schemes.size();
  const std::size_t points = spec.sweep_values.size();
  const std::size_t total = schemes * points * spec.trials;
  result.records.resize(total);

  // Resolved scenarios are shared read-only by the workers.
  std::vector<ScenarioConfig> scenarios;
  scenarios.reserve(schemes * points);
  for (const auto& scheme : spec.schemes)
    for (double v : spec.sweep_values) scenarios.push_back(spec.resolve(scheme, v));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<std::size_t> redraws{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  std::mutex progress_mutex;

  auto work = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total) return;
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      const std::size_t trial = index % spec.trials;
      const std::size_t cell = index / spec.trials;
      const std::size_t scheme = cell / points;
      const std::size_t point = cell % points;
      const ScenarioConfig& scenario = scenarios[cell];
      try {
        for (std::size_t attempt = 0;; ++attempt) {
          const TrialStreams streams = trial_streams(spec.seed, trial, attempt);
          try {
            const channel::ChannelPair channels = trial_channels(scenario, streams);
            TrialRecord r = evaluate_scheme(spec.schemes[scheme].kind, scenario, channels, streams);
            r.scheme = scheme;
            r.point = point;
            r.trial = trial;
            r.attempt = attempt;
            result.records[index] = r;
            redraws.fetch_add(attempt);
            break;
          } catch (const Error& e) {
            if (!is_redrawable(e) || attempt + 1 >= kMaxDrawAttempts) throw;
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, total);
      }
    }
  };

  std::size_t workers = threads ? threads : spec.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(total, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  result.resampled_draws = redraws.load();

  const std::string variable = sweep_name(spec.sweep_variable);
  for (std::size_t s = 0; s < schemes; ++s) {
    for (std::size_t p = 0; p < points; ++p) {
      ResultRow row;
      row.scheme = spec.schemes[s].label;
      row.sweep_variable = variable;
      row.sweep_value = spec.sweep_values[p];
      row.trials = spec.trials;
      row.seed = spec.seed;
      for (std::size_t t = 0; t < spec.trials; ++t) {
        const TrialRecord& r = result.records[(s * points + p) * spec.trials + t];
        row.mean_se += r.spectral_efficiency;
        row.mean_power_w += r.power_w;
        row.mean_ee += r.energy_efficiency;
      }
      const double n = static_cast<double>(spec.trials);
      row.mean_se /= n;
      row.mean_power_w /= n;
      row.mean_ee /= n;
      result.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace hrris::experiment
