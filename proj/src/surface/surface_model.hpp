// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_SURFACE_SURFACE_MODEL_HPP
#define HRRIS_SURFACE_SURFACE_MODEL_HPP

#include <cstddef>
#include <vector>

#include "channel/channel_model.hpp"
#include "linalg/complex_matrix.hpp"

namespace hrris::surface {

using linalg::ComplexMatrix;
using linalg::cplx;

enum class Mode { Ris, FixedHr, DynamicHr, Relay };

const char* to_string(Mode mode) noexcept;

struct SurfaceConfig {
  std::size_t n = 1;
  std::size_t k = 0;
  Mode mode = Mode::Ris;
  std::vector<std::size_t> active_set;  // zero-based; used by FixedHr
  double p_a_max = 0.0;                 // watts
  unsigned phase_bits = 0;              // 0: continuous phases

  /// Default layout per mode: RIS none, RELAY all, FIXED_HR {0..k-1}
  /// unless active_set was given.
  std::vector<std::size_t> resolved_active_set() const;
  void validate() const;
};

struct SystemParams {
  double p_bs = 1.0;     // watts
  double sigma2 = 1e-11; // watts

  double rho() const { return p_bs / sigma2; }
};

/// Amplitudes and phases of all surface elements plus the active set.
/// Elements outside the active set always have unit amplitude.
class CoefficientState {
public:
  CoefficientState() = default;
  explicit CoefficientState(std::size_t n);
  CoefficientState(std::size_t n, const std::vector<std::size_t>& active);

  std::size_t size() const noexcept { return phases_.size(); }
  bool is_active(std::size_t i) const { return active_[i]; }
  std::vector<std::size_t> active_indices() const;
  std::size_t active_count() const;

  double amplitude(std::size_t i) const { return amplitudes_[i]; }
  double phase(std::size_t i) const { return phases_[i]; }
  cplx coefficient(std::size_t i) const;

  /// Phase is wrapped into [0, 2pi).
  void set_phase(std::size_t i, double theta);
  /// Throws InvalidArgument for passive elements unless amplitude == 1.
  void set_amplitude(std::size_t i, double amplitude);
  /// Makes element i active (amplitude kept) or passive (amplitude reset to 1).
  void set_active(std::size_t i, bool active);

  ComplexMatrix upsilon() const;
  ComplexMatrix phi() const;  // passive part, zero on the active set
  ComplexMatrix psi() const;  // active part, zero off the active set

private:
  std::vector<double> amplitudes_;
  std::vector<double> phases_;
  std::vector<bool> active_;
};

/// H_r Upsilon H_t
ComplexMatrix effective_channel(const CoefficientState& state,
                                const channel::ChannelPair& channels);

/// R = I + H_r Psi Psi^H H_r^H
ComplexMatrix noise_covariance(const CoefficientState& state,
                               const ComplexMatrix& h_r);

/// Exact spectral efficiency (bits/s/Hz).
double spectral_efficiency(const CoefficientState& state,
                           const channel::ChannelPair& channels,
                           const SystemParams& params);

/// Upper bound log2|R + rho G G^H| used by the alternating optimization.
double se_upper_bound(const CoefficientState& state,
                      const channel::ChannelPair& channels,
                      const SystemParams& params);

/// xi_n = sigma^2 + P_BS |t_n|^2
double relay_input_power(std::size_t n, const ComplexMatrix& h_t,
                         const SystemParams& params);

/// Transmit power of the active elements, sum |alpha_n|^2 xi_n over the
/// active set.
double active_power(const CoefficientState& state, const ComplexMatrix& h_t,
                    const SystemParams& params);

/// Nearest point of {2 pi q / 2^bits} in circular distance; bits == 0
/// returns theta unchanged.
double quantize_phase(double theta, unsigned bits);

double wrap_phase(double theta);

}  // namespace hrris::surface

#endif  // HRRIS_SURFACE_SURFACE_MODEL_HPP
