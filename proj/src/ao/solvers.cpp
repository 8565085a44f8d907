// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "ao/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "common/error.hpp"
#include "common/tolerances.hpp"

namespace hrris::ao {

using surface::CoefficientState;
using surface::Mode;
using surface::SurfaceConfig;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void finalize(SolveReport& report, const channel::ChannelPair& channels,
              const surface::SystemParams& params) {
  report.spectral_efficiency =
      surface::spectral_efficiency(report.final_state, channels, params);
  report.upper_bound = surface::se_upper_bound(report.final_state, channels, params);
  report.active_power = surface::active_power(report.final_state, channels.h_t, params);
  report.active_count = report.final_state.active_count();
}

double draw_phase(RngStream& rng, unsigned bits) {
  if (bits == 0) return rng.uniform(0.0, kTwoPi);
  const std::uint64_t q = std::uint64_t{1} << bits;
  return kTwoPi * static_cast<double>(rng.uniform_index(q)) / static_cast<double>(q);
}

}  // namespace

CoefficientState update_element(std::size_t n, const CoefficientState& state,
                                const PerElementTerms& terms,
                                const SurfaceConfig& config,
                                double other_active_power) {
  CoefficientState next = state;
  double amplitude = 1.0;
  if (state.is_active(n)) {
    const double budget = config.p_a_max;
    if (other_active_power > budget * (1.0 + tol::kPowerSlack) + 1e-300) {
      fail(ErrorCode::PowerExhausted,
           "update_element: other active elements already use " +
               std::to_string(other_active_power) + " W of " +
               std::to_string(budget) + " W");
    }
    amplitude = std::sqrt(std::max(budget - other_active_power, 0.0) / terms.xi);
    next.set_amplitude(n, amplitude);
  }
  const PerElementTerms& at = std::abs(terms.amplitude - amplitude) <= 1e-15
                                  ? terms
                                  : terms.at_amplitude(amplitude);
  if (at.lambda_zero) return next;  // any phase is optimal; keep the current one

  const double candidate = surface::quantize_phase(-std::arg(at.lambda), config.phase_bits);
  const double current = state.phase(n);
  const double g_new = g_n(std::polar(amplitude, candidate), at);
  const double g_old = g_n(std::polar(amplitude, current), at);
  next.set_phase(n, g_new >= g_old ? candidate : current);
  return next;
}

namespace detail {

CoefficientState random_initial_state(const channel::ChannelPair& channels,
                                      const surface::SystemParams& params,
                                      const SurfaceConfig& config,
                                      const RngStream& init_rng) {
  const auto active = config.resolved_active_set();
  CoefficientState state(config.n, active);
  RngStream rng = init_rng;
  for (std::size_t i = 0; i < config.n; ++i) state.set_phase(i, draw_phase(rng, config.phase_bits));
  // Equal power split that meets the budget with equality.
  for (std::size_t i : active) {
    const double xi = surface::relay_input_power(i, channels.h_t, params);
    state.set_amplitude(i, std::sqrt(config.p_a_max / (static_cast<double>(active.size()) * xi)));
  }
  return state;
}

AoRun run_ao(const channel::ChannelPair& channels,
             const surface::SystemParams& params, const SurfaceConfig& config,
             CoefficientState state, const AoOptions& options) {
  const std::size_t n_el = state.size();
  const std::size_t nr = channels.h_r.rows();
  const double rho = params.rho();

  std::vector<ComplexMatrix> r(n_el), t(n_el);
  std::vector<double> xi(n_el);
  for (std::size_t i = 0; i < n_el; ++i) {
    r[i] = channels.r(i);
    t[i] = channels.t(i);
    xi[i] = surface::relay_input_power(i, channels.h_t, params);
  }

  AoRun run;
  run.last_terms.resize(n_el);
  auto& report = run.report;
  report.objective_trace.push_back(surface::se_upper_bound(state, channels, params));

  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    // Partial sums are rebuilt every sweep so rounding does not accumulate.
    ComplexMatrix noise(nr, nr);
    ComplexMatrix signal = surface::effective_channel(state, channels);
    double power = 0.0;
    for (std::size_t i = 0; i < n_el; ++i) {
      if (!state.is_active(i)) continue;
      const double a2 = state.amplitude(i) * state.amplitude(i);
      noise.add_outer(a2, r[i], r[i]);
      power += a2 * xi[i];
    }

    for (std::size_t n = 0; n < n_el; ++n) {
      const bool active = state.is_active(n);
      const double a2_old = state.amplitude(n) * state.amplitude(n);
      signal.add_outer(-state.coefficient(n), r[n], t[n]);
      if (active) {
        noise.add_outer(-a2_old, r[n], r[n]);
        power -= a2_old * xi[n];
      }

      PerElementTerms terms = terms_from_partials(n, active, r[n], t[n], noise, signal,
                                                  rho, xi[n], state.amplitude(n));
      state = update_element(n, state, terms, config, std::max(power, 0.0));
      if (std::abs(terms.amplitude - state.amplitude(n)) > 1e-15) {
        terms = terms.at_amplitude(state.amplitude(n));
      }
      run.last_terms[n] = std::move(terms);

      signal.add_outer(state.coefficient(n), r[n], t[n]);
      if (active) {
        const double a2 = state.amplitude(n) * state.amplitude(n);
        noise.add_outer(a2, r[n], r[n]);
        power += a2 * xi[n];
      }
    }

    report.sweeps = sweep + 1;
    const double f = surface::se_upper_bound(state, channels, params);
    const double gain = f - report.objective_trace.back();
    report.objective_trace.push_back(f);
    if (gain < options.gain_tolerance) {
      report.converged = true;
      break;
    }
  }
  report.final_state = std::move(state);
  finalize(report, channels, params);
  return run;
}

}  // namespace detail

SolveReport solve_fixed(const channel::ChannelPair& channels,
                        const surface::SystemParams& params,
                        const SurfaceConfig& config, const RngStream& init_rng,
                        const AoOptions& options) {
  config.validate();
  if (config.mode == Mode::DynamicHr) {
    fail(ErrorCode::InvalidArgument, "solve_fixed: DYNAMIC_HR needs solve_dynamic");
  }
  auto initial = detail::random_initial_state(channels, params, config, init_rng);
  return detail::run_ao(channels, params, config, std::move(initial), options).report;
}

std::vector<std::size_t> rank_active_candidates(const std::vector<PerElementTerms>& terms) {
  std::vector<std::size_t> order(terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return terms[a].zeta / terms[a].xi > terms[b].zeta / terms[b].xi;
  });
  for (auto& i : order) i = terms[i].index;
  return order;
}

SolveReport solve_dynamic(const channel::ChannelPair& channels,
                          const surface::SystemParams& params,
                          const SurfaceConfig& config, const RngStream& init_rng,
                          const AoOptions& options) {
  config.validate();
  if (config.mode != Mode::DynamicHr) {
    fail(ErrorCode::InvalidArgument, "solve_dynamic: mode must be DYNAMIC_HR");
  }
  SurfaceConfig passive = config;
  passive.mode = Mode::Ris;
  passive.k = 0;
  passive.active_set.clear();
  auto initial = detail::random_initial_state(channels, params, passive, init_rng);
  auto run = detail::run_ao(channels, params, passive, std::move(initial), options);

  std::vector<WaterfillCandidate> candidates;
  for (std::size_t idx : rank_active_candidates(run.last_terms)) {
    if (candidates.size() == config.k) break;
    const auto& t = run.last_terms[idx];
    if (!(t.zeta > 0.0)) continue;
    candidates.push_back({idx, t.zeta, t.xi});
  }
  const WaterfillResult alloc = waterfill(candidates, config.p_a_max);

  SolveReport report = std::move(run.report);
  const CoefficientState passive_state = report.final_state;
  CoefficientState& state = report.final_state;
  for (std::size_t i = 0; i < alloc.indices.size(); ++i) {
    const std::size_t idx = alloc.indices[i];
    const double amplitude = std::sqrt(alloc.allocations[i] / candidates[i].xi);
    // Elements that cannot amplify stay passive.
    if (amplitude > 1.0) {
      state.set_active(idx, true);
      state.set_amplitude(idx, amplitude);
    }
  }
  finalize(report, channels, params);
  // Keep the passive surface when the allocation does not improve on it.
  if (report.active_count > 0 &&
      report.spectral_efficiency <
          surface::spectral_efficiency(passive_state, channels, params)) {
    report.final_state = passive_state;
    finalize(report, channels, params);
  }
  return report;
}

SolveReport exhaustive_search(const channel::ChannelPair& channels,
                              const surface::SystemParams& params,
                              const SurfaceConfig& config) {
  config.validate();
  if (config.phase_bits == 0) {
    fail(ErrorCode::InvalidArgument, "exhaustive_search needs quantized phases (bits > 0)");
  }
  const std::size_t n_el = config.n;
  const std::size_t q = std::size_t{1} << config.phase_bits;

  // Candidate active sets with their amplitudes.
  struct Placement {
    std::vector<std::size_t> active;
    std::vector<double> amplitude;
  };
  std::vector<Placement> placements;
  std::vector<double> xi(n_el);
  for (std::size_t i = 0; i < n_el; ++i) xi[i] = surface::relay_input_power(i, channels.h_t, params);

  if (config.mode == Mode::DynamicHr) {
    placements.push_back({});
    // All subsets of size 1..K, equal power split; subsets with any element
    // unable to amplify are covered by smaller subsets.
    std::vector<std::size_t> subset;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
      if (!subset.empty()) {
        Placement p{subset, {}};
        bool amplifies = true;
        for (std::size_t i : subset) {
          const double a = std::sqrt(config.p_a_max / (static_cast<double>(subset.size()) * xi[i]));
          amplifies = amplifies && a > 1.0;
          p.amplitude.push_back(a);
        }
        if (amplifies) placements.push_back(std::move(p));
      }
      if (subset.size() == config.k) return;
      for (std::size_t i = start; i < n_el; ++i) {
        subset.push_back(i);
        self(self, i + 1);
        subset.pop_back();
      }
    };
    recurse(recurse, 0);
  } else {
    Placement p{config.resolved_active_set(), {}};
    for (std::size_t i : p.active) {
      p.amplitude.push_back(
          std::sqrt(config.p_a_max / (static_cast<double>(p.active.size()) * xi[i])));
    }
    placements.push_back(std::move(p));
  }

  const double space = std::pow(static_cast<double>(q), static_cast<double>(n_el)) *
                       static_cast<double>(placements.size());
  if (space > tol::kMaxSearchSpace) {
    fail(ErrorCode::SearchSpaceTooLarge,
         "exhaustive_search: " + std::to_string(space) + " candidates exceed the guard");
  }

  const std::size_t nr = channels.h_r.rows();
  const std::size_t nt = channels.h_t.cols();
  const double rho = params.rho();
  std::vector<ComplexMatrix> rt(n_el);
  for (std::size_t i = 0; i < n_el; ++i) rt[i] = outer(channels.r(i), channels.t(i));
  std::vector<cplx> grid(q);
  for (std::size_t k = 0; k < q; ++k)
    grid[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(q));

  double best = -std::numeric_limits<double>::infinity();
  CoefficientState best_state;
  std::vector<std::size_t> digits(n_el);
  std::vector<double> amp(n_el);
  for (const auto& placement : placements) {
    CoefficientState probe(n_el, placement.active);
    std::fill(amp.begin(), amp.end(), 1.0);
    for (std::size_t j = 0; j < placement.active.size(); ++j) {
      amp[placement.active[j]] = placement.amplitude[j];
      probe.set_amplitude(placement.active[j], placement.amplitude[j]);
    }
    const ComplexMatrix r_cov = surface::noise_covariance(probe, channels.h_r);
    const double log_r = linalg::logdet(r_cov);

    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      ComplexMatrix g(nr, nt);
      for (std::size_t i = 0; i < n_el; ++i) {
        const cplx a = amp[i] * grid[digits[i]];
        const auto src = rt[i].entries();
        for (std::size_t e = 0; e < nr * nt; ++e) g(e / nt, e % nt) += a * src[e];
      }
      ComplexMatrix m = r_cov;
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
          cplx s = 0.0;
          for (std::size_t c = 0; c < nt; ++c) s += g(i, c) * std::conj(g(j, c));
          m(i, j) += rho * s;
        }
      const double se = linalg::logdet(m) - log_r;
      if (se > best) {
        best = se;
        best_state = probe;
        for (std::size_t i = 0; i < n_el; ++i)
          best_state.set_phase(i, kTwoPi * static_cast<double>(digits[i]) / static_cast<double>(q));
      }
      std::size_t pos = 0;
      while (pos < n_el && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == n_el) break;
    }
  }

  SolveReport report;
  report.final_state = std::move(best_state);
  report.converged = true;
  finalize(report, channels, params);
  report.objective_trace.push_back(report.upper_bound);
  return report;
}

SolveReport random_phase_baseline(const channel::ChannelPair& channels,
                                  const surface::SystemParams& params,
                                  const SurfaceConfig& config, const RngStream& rng) {
  CoefficientState state(config.n);
  RngStream stream = rng;
  for (std::size_t i = 0; i < config.n; ++i) state.set_phase(i, draw_phase(stream, config.phase_bits));
  SolveReport report;
  report.final_state = std::move(state);
  report.converged = true;
  finalize(report, channels, params);
  report.objective_trace.push_back(report.upper_bound);
  return report;
}

}  // namespace hrris::ao
