// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_AO_SOLVERS_HPP
#define HRRIS_AO_SOLVERS_HPP

#include <cstddef>
#include <vector>

#include "ao/element_terms.hpp"
#include "ao/waterfill.hpp"
#include "channel/channel_model.hpp"
#include "common/rng.hpp"
#include "surface/surface_model.hpp"

namespace hrris::ao {

struct SolveReport {
  surface::CoefficientState final_state;
  std::vector<double> objective_trace;  // bound after init and after each sweep
  std::size_t sweeps = 0;
  bool converged = false;

  double spectral_efficiency = 0.0;  // exact SE of final_state
  double upper_bound = 0.0;
  double active_power = 0.0;         // watts
  std::size_t active_count = 0;
};

struct AoOptions {
  double gain_tolerance = 1e-4;
  std::size_t max_sweeps = 50;
};

/// Closed-form single-coefficient update. `other_active_power` is the active
/// power of every other active element; `terms` may be evaluated at any
/// amplitude.
surface::CoefficientState update_element(std::size_t n,
                                         const surface::CoefficientState& state,
                                         const PerElementTerms& terms,
                                         const surface::SurfaceConfig& config,
                                         double other_active_power);

/// Fixed active set (also RIS with K = 0 and RELAY with K = N).
SolveReport solve_fixed(const channel::ChannelPair& channels,
                        const surface::SystemParams& params,
                        const surface::SurfaceConfig& config,
                        const RngStream& init_rng, const AoOptions& options = {});

/// Dynamic active set: all-passive AO, ranking by zeta/xi, water-filling.
SolveReport solve_dynamic(const channel::ChannelPair& channels,
                          const surface::SystemParams& params,
                          const surface::SurfaceConfig& config,
                          const RngStream& init_rng, const AoOptions& options = {});

/// Indices sorted by zeta/xi descending, ties to the lower index.
std::vector<std::size_t> rank_active_candidates(
    const std::vector<PerElementTerms>& terms);

/// Best exact SE over every quantized phase tuple (and, for DYNAMIC_HR, every
/// active placement of up to K elements).
SolveReport exhaustive_search(const channel::ChannelPair& channels,
                              const surface::SystemParams& params,
                              const surface::SurfaceConfig& config);

/// Unit-amplitude surface with phases drawn uniformly over the phase grid.
SolveReport random_phase_baseline(const channel::ChannelPair& channels,
                                  const surface::SystemParams& params,
                                  const surface::SurfaceConfig& config,
                                  const RngStream& rng);

namespace detail {

struct AoRun {
  SolveReport report;
  std::vector<PerElementTerms> last_terms;  // from the final sweep
};

AoRun run_ao(const channel::ChannelPair& channels,
             const surface::SystemParams& params,
             const surface::SurfaceConfig& config,
             surface::CoefficientState initial, const AoOptions& options);

surface::CoefficientState random_initial_state(
    const channel::ChannelPair& channels, const surface::SystemParams& params,
    const surface::SurfaceConfig& config, const RngStream& init_rng);

}  // namespace detail

}  // namespace hrris::ao

#endif  // HRRIS_AO_SOLVERS_HPP
