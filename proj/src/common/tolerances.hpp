// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_COMMON_TOLERANCES_HPP
#define HRRIS_COMMON_TOLERANCES_HPP

#include <cstddef>

// All numerical thresholds live here.
namespace hrris::tol {

// LU pivot magnitude below this fraction of the max-abs entry is singular.
inline constexpr double kPivotRelative = 1e-12;
// Matrices with max-abs entry at or below this are treated as zero.
inline constexpr double kZeroMatrix = 1e-14;
// Rank-1 check: ||M*M - tr(M) M|| <= this * ||M||^2 (debug builds only).
inline constexpr double kRankOne = 1e-8;
// Deviation of ||u|| from one accepted by basis completion.
inline constexpr double kUnitNorm = 1e-9;
// cos(arg det) must exceed this for logdet to accept the determinant.
inline constexpr double kDetPhase = 1e-9;

// Relative slack on power budgets.
inline constexpr double kPowerSlack = 1e-12;

// Alternating-optimization stopping rule.
inline constexpr double kAoGain = 1e-4;   // bits/s/Hz per sweep
inline constexpr std::size_t kAoMaxSweeps = 50;

// Water-filling bisection, relative to the water level.
inline constexpr double kWaterLevel = 1e-10;

// Exhaustive search guard on enumerated candidates.
inline constexpr double kMaxSearchSpace = 1e7;

}  // namespace hrris::tol

#endif  // HRRIS_COMMON_TOLERANCES_HPP
