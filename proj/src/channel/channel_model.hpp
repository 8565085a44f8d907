// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_CHANNEL_CHANNEL_MODEL_HPP
#define HRRIS_CHANNEL_CHANNEL_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>

#include "common/rng.hpp"
#include "linalg/complex_matrix.hpp"

namespace hrris::channel {

using linalg::ComplexMatrix;

/// Rician factor value meaning "pure line of sight".
inline constexpr double kInfiniteKappa = std::numeric_limits<double>::infinity();

/// BS at the origin, surface at (surface_x, 0), MS at (ms_x, ms_y). Meters.
struct GeometryConfig {
  double surface_x = 51.0;
  double ms_x = 40.0;
  double ms_y = 2.0;

  double bs_surface_distance() const;
  double surface_ms_distance() const;
  void validate() const;
};

struct FadingConfig {
  double beta0 = 1e-3;  // linear gain at 1 m
  double epsilon_t = 2.2;
  double epsilon_r = 2.8;
  double kappa_t = kInfiniteKappa;
  double kappa_r = 0.0;

  void validate() const;
};

/// Array sizes and arrival/departure angles. Unset angles are drawn per
/// channel realization.
struct ArrayGeometry {
  std::size_t n_bs = 1;
  std::size_t n_ms = 1;
  std::size_t n_surface = 1;
  std::size_t n_x = 0;  // UPA row width; 0 selects ceil(sqrt(n_surface))
  std::optional<double> theta_bs;
  std::optional<double> theta_h;
  std::optional<double> phi_h;

  std::size_t row_width() const;
  void validate() const;
};

struct ChannelPair {
  ComplexMatrix h_t;  // n_surface x n_bs
  ComplexMatrix h_r;  // n_ms x n_surface

  std::size_t n_surface() const { return h_t.rows(); }
  /// Column n of h_r.
  ComplexMatrix r(std::size_t n) const { return h_r.col(n); }
  /// t_n such that row n of h_t equals t_n^H.
  ComplexMatrix t(std::size_t n) const { return h_t.row(n).adjoint(); }

  /// Channels restricted to the first `count` surface elements.
  ChannelPair leading_elements(std::size_t count) const;
};

/// Channel power gain beta0 * d^-epsilon. Throws InvalidDistance for d < 1 m.
double path_gain(double distance_m, double beta0, double epsilon);

ComplexMatrix ula_response(double theta, std::size_t n);
ComplexMatrix upa_response(double theta, double phi, std::size_t n,
                           std::size_t n_x);

/// sqrt(k/(1+k)) los + sqrt(1/(1+k)) W with W i.i.d. CN(0,1).
ComplexMatrix rician_channel(const ComplexMatrix& los, double kappa,
                             RngStream& rng);

/// Draws one BS->surface / surface->MS realization. Angles, h_t scattering
/// and h_r scattering use separate children of `rng`.
ChannelPair synthesize(const GeometryConfig& geometry,
                       const FadingConfig& fading, const ArrayGeometry& arrays,
                       const RngStream& rng);

}  // namespace hrris::channel

#endif  // HRRIS_CHANNEL_CHANNEL_MODEL_HPP
