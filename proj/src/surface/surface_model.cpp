// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "surface/surface_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "common/error.hpp"

namespace hrris::surface {

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Ris: return "RIS";
    case Mode::FixedHr: return "FIXED_HR";
    case Mode::DynamicHr: return "DYNAMIC_HR";
    case Mode::Relay: return "RELAY";
  }
  return "?";
}

std::vector<std::size_t> SurfaceConfig::resolved_active_set() const {
  switch (mode) {
    case Mode::Ris:
    case Mode::DynamicHr:
      return {};
    case Mode::Relay: {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      return all;
    }
    case Mode::FixedHr: {
      if (!active_set.empty()) return active_set;
      std::vector<std::size_t> first(k);
      for (std::size_t i = 0; i < k; ++i) first[i] = i;
      return first;
    }
  }
  return {};
}

void SurfaceConfig::validate() const {
  if (n == 0) fail(ErrorCode::ConfigError, "surface: N must be >= 1");
  if (!(p_a_max >= 0.0)) fail(ErrorCode::ConfigError, "surface: P_a^max must be >= 0");
  if (phase_bits > 16) fail(ErrorCode::ConfigError, "surface: phase bits must be <= 16");
  if (k > n) fail(ErrorCode::ConfigError, "surface: K must not exceed N");
  if (mode == Mode::FixedHr) {
    auto set = resolved_active_set();
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end() ||
        set.size() != k || (!set.empty() && set.back() >= n)) {
      fail(ErrorCode::ConfigError,
           "surface: fixed active set must hold K distinct indices below N");
    }
  }
  if (mode == Mode::Relay && k != n) {
    fail(ErrorCode::ConfigError, "surface: RELAY requires K == N");
  }
  if (mode == Mode::DynamicHr && k == 0) {
    fail(ErrorCode::ConfigError, "surface: DYNAMIC_HR requires K >= 1");
  }
}

CoefficientState::CoefficientState(std::size_t n)
    : amplitudes_(n, 1.0), phases_(n, 0.0), active_(n, false) {}

CoefficientState::CoefficientState(std::size_t n,
                                   const std::vector<std::size_t>& active)
    : CoefficientState(n) {
  for (std::size_t i : active) {
    if (i >= n) fail(ErrorCode::InvalidArgument, "active index out of range");
    active_[i] = true;
  }
}

std::vector<std::size_t> CoefficientState::active_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < active_.size(); ++i)
    if (active_[i]) out.push_back(i);
  return out;
}

std::size_t CoefficientState::active_count() const {
  return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
}

cplx CoefficientState::coefficient(std::size_t i) const {
  return std::polar(amplitudes_[i], phases_[i]);
}

void CoefficientState::set_phase(std::size_t i, double theta) {
  phases_.at(i) = wrap_phase(theta);
}

void CoefficientState::set_amplitude(std::size_t i, double amplitude) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    fail(ErrorCode::InvalidArgument, "amplitude must be finite and >= 0");
  }
  if (!active_.at(i) && amplitude != 1.0) {
    fail(ErrorCode::InvalidArgument,
         "passive element " + std::to_string(i) + " must keep unit amplitude");
  }
  amplitudes_[i] = amplitude;
}

void CoefficientState::set_active(std::size_t i, bool active) {
  active_.at(i) = active;
  if (!active) amplitudes_[i] = 1.0;
}

ComplexMatrix CoefficientState::upsilon() const {
  ComplexMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, i) = coefficient(i);
  return m;
}

ComplexMatrix CoefficientState::phi() const {
  ComplexMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    if (!active_[i]) m(i, i) = coefficient(i);
  return m;
}

ComplexMatrix CoefficientState::psi() const {
  ComplexMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    if (active_[i]) m(i, i) = coefficient(i);
  return m;
}

namespace {

void require_shapes(const CoefficientState& state,
                    const channel::ChannelPair& channels) {
  if (channels.h_t.rows() != state.size() || channels.h_r.cols() != state.size()) {
    fail(ErrorCode::InvalidArgument,
         "channel shapes do not match surface size " + std::to_string(state.size()));
  }
}

}  // namespace

ComplexMatrix effective_channel(const CoefficientState& state,
                                const channel::ChannelPair& channels) {
  require_shapes(state, channels);
  const auto& h_r = channels.h_r;
  const auto& h_t = channels.h_t;
  ComplexMatrix g(h_r.rows(), h_t.cols());
  for (std::size_t n = 0; n < state.size(); ++n) {
    const cplx a = state.coefficient(n);
    for (std::size_t r = 0; r < h_r.rows(); ++r) {
      const cplx w = a * h_r(r, n);
      for (std::size_t c = 0; c < h_t.cols(); ++c) g(r, c) += w * h_t(n, c);
    }
  }
  return g;
}

ComplexMatrix noise_covariance(const CoefficientState& state,
                               const ComplexMatrix& h_r) {
  if (h_r.cols() != state.size()) {
    fail(ErrorCode::InvalidArgument, "noise_covariance: H_r column mismatch");
  }
  ComplexMatrix r = ComplexMatrix::identity(h_r.rows());
  for (std::size_t n = 0; n < state.size(); ++n) {
    if (!state.is_active(n)) continue;
    const double a2 = state.amplitude(n) * state.amplitude(n);
    const ComplexMatrix rn = h_r.col(n);
    r.add_outer(a2, rn, rn);
  }
  return r;
}

namespace {

ComplexMatrix signal_plus_noise(const ComplexMatrix& r, const ComplexMatrix& g,
                                double rho) {
  ComplexMatrix out = r;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.rows(); ++j) {
      cplx s = 0.0;
      for (std::size_t c = 0; c < g.cols(); ++c) s += g(i, c) * std::conj(g(j, c));
      out(i, j) += rho * s;
    }
  return out;
}

}  // namespace

double spectral_efficiency(const CoefficientState& state,
                           const channel::ChannelPair& channels,
                           const SystemParams& params) {
  const ComplexMatrix r = noise_covariance(state, channels.h_r);
  const ComplexMatrix g = effective_channel(state, channels);
  const double se = linalg::logdet(signal_plus_noise(r, g, params.rho())) -
                    linalg::logdet(r);
  return std::max(se, 0.0);
}

double se_upper_bound(const CoefficientState& state,
                      const channel::ChannelPair& channels,
                      const SystemParams& params) {
  const ComplexMatrix r = noise_covariance(state, channels.h_r);
  const ComplexMatrix g = effective_channel(state, channels);
  return linalg::logdet(signal_plus_noise(r, g, params.rho()));
}

double relay_input_power(std::size_t n, const ComplexMatrix& h_t,
                         const SystemParams& params) {
  double t2 = 0.0;
  for (std::size_t c = 0; c < h_t.cols(); ++c) t2 += std::norm(h_t(n, c));
  return params.sigma2 + params.p_bs * t2;
}

double active_power(const CoefficientState& state, const ComplexMatrix& h_t,
                    const SystemParams& params) {
  double total = 0.0;
  for (std::size_t n = 0; n < state.size(); ++n) {
    if (!state.is_active(n)) continue;
    total += state.amplitude(n) * state.amplitude(n) *
             relay_input_power(n, h_t, params);
  }
  return total;
}

double wrap_phase(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(theta, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

double quantize_phase(double theta, unsigned bits) {
  if (bits == 0) return theta;
  const std::size_t q = std::size_t{1} << bits;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
  const double pos = wrap_phase(theta) / step;
  auto lower = static_cast<std::size_t>(std::floor(pos));
  if (lower >= q) lower = q - 1;
  const double frac = pos - static_cast<double>(lower);
  const std::size_t upper = (lower + 1) % q;
  std::size_t pick;
  if (frac < 0.5) {
    pick = lower;
  } else if (frac > 0.5) {
    pick = upper;
  } else {
    pick = std::min(lower, upper);  // tie: smaller grid value
  }
  return static_cast<double>(pick) * step;
}

}  // namespace hrris::surface
