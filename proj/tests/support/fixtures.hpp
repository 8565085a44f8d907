// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_TESTS_SUPPORT_FIXTURES_HPP
#define HRRIS_TESTS_SUPPORT_FIXTURES_HPP

#include <vector>

#include "channel/channel_model.hpp"
#include "oracles.hpp"
#include "surface/surface_model.hpp"

namespace fixture {

inline hrris::channel::ChannelPair to_pair(const oracle::Channels& ch) {
  using hrris::linalg::ComplexMatrix;
  return {ComplexMatrix(ch.n, ch.nt, ch.h_t), ComplexMatrix(ch.nr, ch.n, ch.h_r)};
}

inline std::vector<oracle::cplx> coefficients(const hrris::surface::CoefficientState& s) {
  std::vector<oracle::cplx> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.coefficient(i));
  return out;
}

inline std::vector<bool> active_mask(const hrris::surface::CoefficientState& s) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.is_active(i));
  return out;
}

/// Random phases, active set {0..k-1} with amplitudes in [1, 1 + spread].
inline hrris::surface::CoefficientState random_state(std::mt19937_64& gen, std::size_t n,
                                                     std::size_t k, double spread = 3.0) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < k; ++i) active.push_back(i);
  hrris::surface::CoefficientState s(n, active);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    s.set_phase(i, 6.283185307179586 * u(gen));
    if (i < k) s.set_amplitude(i, 1.0 + spread * u(gen));
  }
  return s;
}

}  // namespace fixture

#endif  // HRRIS_TESTS_SUPPORT_FIXTURES_HPP
