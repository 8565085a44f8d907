// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "channel/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "common/error.hpp"

namespace hrris::channel {

using linalg::cplx;

double GeometryConfig::bs_surface_distance() const { return surface_x; }

double GeometryConfig::surface_ms_distance() const {
  return std::hypot(surface_x - ms_x, ms_y);
}

void GeometryConfig::validate() const {
  if (!(bs_surface_distance() > 0.0) || !(surface_ms_distance() > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "geometry: BS-surface and surface-MS distances must be positive");
  }
}

void FadingConfig::validate() const {
  if (!(beta0 > 0.0)) fail(ErrorCode::InvalidArgument, "fading: beta0 must be > 0");
  if (!(epsilon_t >= 0.0) || !(epsilon_r >= 0.0)) {
    fail(ErrorCode::InvalidArgument, "fading: path-loss exponents must be >= 0");
  }
  if (!(kappa_t >= 0.0) || !(kappa_r >= 0.0)) {
    fail(ErrorCode::InvalidArgument, "fading: Rician factors must be >= 0");
  }
}

std::size_t ArrayGeometry::row_width() const {
  if (n_x != 0) return n_x;
  return static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(n_surface)) - 1e-12));
}

void ArrayGeometry::validate() const {
  if (n_bs == 0 || n_ms == 0 || n_surface == 0) {
    fail(ErrorCode::InvalidArgument, "arrays: antenna counts must be positive");
  }
  const std::size_t w = row_width();
  if (w < 1 || w > n_surface) {
    fail(ErrorCode::InvalidArgument,
         "arrays: UPA row width " + std::to_string(w) + " outside [1, N]");
  }
}

ChannelPair ChannelPair::leading_elements(std::size_t count) const {
  if (count == 0 || count > n_surface()) {
    fail(ErrorCode::InvalidArgument, "leading_elements: count out of range");
  }
  return {h_t.block(0, 0, count, h_t.cols()), h_r.block(0, 0, h_r.rows(), count)};
}

double path_gain(double distance_m, double beta0, double epsilon) {
  if (!(distance_m >= 1.0)) {
    fail(ErrorCode::InvalidDistance,
         "path_gain: distance " + std::to_string(distance_m) + " m below 1 m");
  }
  return beta0 * std::pow(distance_m, -epsilon);
}

ComplexMatrix ula_response(double theta, std::size_t n) {
  ComplexMatrix a(n, 1);
  const double s = std::sin(theta);
  for (std::size_t m = 0; m < n; ++m) {
    a[m] = std::polar(1.0, std::numbers::pi * static_cast<double>(m) * s);
  }
  return a;
}

ComplexMatrix upa_response(double theta, double phi, std::size_t n,
                           std::size_t n_x) {
  if (n_x == 0) fail(ErrorCode::InvalidArgument, "upa_response: n_x must be >= 1");
  ComplexMatrix a(n, 1);
  const double sy = std::sin(theta) * std::sin(phi);
  const double sx = std::sin(theta) * std::cos(phi);
  for (std::size_t m = 0; m < n; ++m) {
    const auto row = static_cast<double>(m / n_x);
    const auto col = static_cast<double>(m % n_x);
    a[m] = std::polar(1.0, std::numbers::pi * (row * sy + col * sx));
  }
  return a;
}

ComplexMatrix rician_channel(const ComplexMatrix& los, double kappa,
                             RngStream& rng) {
  if (!(kappa >= 0.0)) {
    fail(ErrorCode::InvalidArgument, "rician_channel: kappa must be >= 0");
  }
  if (std::isinf(kappa)) return los;
  ComplexMatrix out(los.rows(), los.cols());
  if (kappa == 0.0) {
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = rng.complex_normal();
    return out;
  }
  const double w_los = std::sqrt(kappa / (1.0 + kappa));
  const double w_nlos = std::sqrt(1.0 / (1.0 + kappa));
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c)
      out(r, c) = w_los * los(r, c) + w_nlos * rng.complex_normal();
  return out;
}

ChannelPair synthesize(const GeometryConfig& geometry,
                       const FadingConfig& fading, const ArrayGeometry& arrays,
                       const RngStream& rng) {
  geometry.validate();
  fading.validate();
  arrays.validate();

  constexpr double pi = std::numbers::pi;
  RngStream angles = rng.split("angles");
  // Every angle is drawn even when overridden, so overrides do not shift the others.
  const double draw_theta_bs = angles.uniform(0.0, 2.0 * pi);
  const double draw_theta_h = angles.uniform(0.0, 2.0 * pi);
  const double draw_phi_h = angles.uniform(-pi / 2.0, pi / 2.0);
  const double draw_theta_ms = angles.uniform(0.0, 2.0 * pi);
  const double draw_theta_hd = angles.uniform(0.0, 2.0 * pi);
  const double draw_phi_hd = angles.uniform(-pi / 2.0, pi / 2.0);

  const double theta_bs = arrays.theta_bs.value_or(draw_theta_bs);
  const double theta_h = arrays.theta_h.value_or(draw_theta_h);
  const double phi_h = arrays.phi_h.value_or(draw_phi_h);
  const std::size_t n_x = arrays.row_width();

  // LoS components: a_H a_BS^H for the BS link, a_MS a_H^H for the MS link.
  const ComplexMatrix los_t =
      outer(upa_response(theta_h, phi_h, arrays.n_surface, n_x),
            ula_response(theta_bs, arrays.n_bs));
  const ComplexMatrix los_r =
      outer(ula_response(draw_theta_ms, arrays.n_ms),
            upa_response(draw_theta_hd, draw_phi_hd, arrays.n_surface, n_x));

  RngStream stream_t = rng.split("h_t");
  RngStream stream_r = rng.split("h_r");
  ChannelPair pair{rician_channel(los_t, fading.kappa_t, stream_t),
                   rician_channel(los_r, fading.kappa_r, stream_r)};

  const double beta_t =
      path_gain(geometry.bs_surface_distance(), fading.beta0, fading.epsilon_t);
  const double beta_r =
      path_gain(geometry.surface_ms_distance(), fading.beta0, fading.epsilon_r);
  pair.h_t *= std::sqrt(beta_t);
  pair.h_r *= std::sqrt(beta_r);
  return pair;
}

}  // namespace hrris::channel
