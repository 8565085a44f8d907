// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_AO_WATERFILL_HPP
#define HRRIS_AO_WATERFILL_HPP

#include <cstddef>
#include <vector>

namespace hrris::ao {

struct WaterfillCandidate {
  std::size_t index = 0;
  double zeta = 0.0;  // > 0
  double xi = 0.0;    // > 0, watts
};

struct WaterfillResult {
  std::vector<std::size_t> indices;
  std::vector<double> allocations;  // watts, parallel to indices
  double water_level_inverse = 0.0; // mu, 1/watts

  double total() const;
};

/// p_n = max(1/mu - xi_n/zeta_n, 0) with mu chosen by bisection so the
/// allocations exhaust the budget. Empty candidates give an empty result.
WaterfillResult waterfill(const std::vector<WaterfillCandidate>& candidates,
                          double budget);

/// sum log2(1 + zeta_n p_n / xi_n)
double waterfill_objective(const std::vector<WaterfillCandidate>& candidates,
                           const std::vector<double>& allocations);

}  // namespace hrris::ao

#endif  // HRRIS_AO_WATERFILL_HPP
