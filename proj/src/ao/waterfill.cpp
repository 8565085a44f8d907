// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "ao/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/error.hpp"
#include "common/tolerances.hpp"

namespace hrris::ao {

double WaterfillResult::total() const {
  return std::accumulate(allocations.begin(), allocations.end(), 0.0);
}

WaterfillResult waterfill(const std::vector<WaterfillCandidate>& candidates,
                          double budget) {
  if (!(budget >= 0.0)) fail(ErrorCode::InvalidArgument, "waterfill: budget must be >= 0");
  WaterfillResult out;
  if (candidates.empty()) return out;

  std::vector<double> floor(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (!(c.zeta > 0.0) || !(c.xi > 0.0)) {
      fail(ErrorCode::InvalidArgument, "waterfill: zeta and xi must be positive");
    }
    floor[i] = c.xi / c.zeta;
  }
  const auto filled = [&](double level) {
    double s = 0.0;
    for (double f : floor) s += std::max(level - f, 0.0);
    return s;
  };

  // filled() is continuous and nondecreasing; bracket the level and bisect.
  double lo = *std::min_element(floor.begin(), floor.end());
  double hi = lo + budget;
  if (budget > 0.0) {
    for (int it = 0; it < 400 && hi - lo > tol::kWaterLevel * hi * 1e-3; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (filled(mid) > budget) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  const double level = budget > 0.0 ? lo : hi;

  out.water_level_inverse = 1.0 / level;
  out.indices.reserve(candidates.size());
  out.allocations.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.indices.push_back(candidates[i].index);
    out.allocations.push_back(std::max(level - floor[i], 0.0));
  }
  return out;
}

double waterfill_objective(const std::vector<WaterfillCandidate>& candidates,
                           const std::vector<double>& allocations) {
  double s = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    s += std::log2(1.0 + candidates[i].zeta * allocations[i] / candidates[i].xi);
  }
  return s;
}

}  // namespace hrris::ao
