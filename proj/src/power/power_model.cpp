// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "power/power_model.hpp"

#include <cmath>

#include "common/error.hpp"

namespace hrris::power {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    fail(ErrorCode::NonPositivePower, "watts_to_dbm: power must be > 0");
  }
  return 10.0 * std::log10(watts) + 30.0;
}

void PowerModelParams::validate() const {
  if (!(tau_bs > 0.0 && tau_bs <= 1.0) || !(tau_a > 0.0 && tau_a <= 1.0)) {
    fail(ErrorCode::ConfigError, "power model: efficiencies must lie in (0, 1]");
  }
  for (double p : {p_bs_dynamic, p_bs_static, p_a_dynamic, p_a_static, p_passive,
                   p_switch, bandwidth_hz}) {
    if (!(p >= 0.0)) fail(ErrorCode::ConfigError, "power model: powers must be >= 0");
  }
}

double PowerBreakdown::component(const std::string& name) const {
  for (const auto& [label, value] : components)
    if (label == name) return value;
  return 0.0;
}

namespace {

PowerBreakdown assemble(std::vector<std::pair<std::string, double>> parts) {
  PowerBreakdown b;
  for (const auto& [label, value] : parts) b.total += value;
  b.components = std::move(parts);
  return b;
}

}  // namespace

PowerBreakdown power_fixed(std::size_t n_t, std::size_t k, std::size_t m,
                           double p_bs, double p_a, const PowerModelParams& params) {
  params.validate();
  const double circuit = static_cast<double>(n_t) * params.p_bs_dynamic +
                         static_cast<double>(k) * params.p_a_dynamic +
                         params.p_bs_static + params.p_a_static;
  return assemble({{"bs_amplifier", p_bs / params.tau_bs},
                   {"surface_amplifier", p_a / params.tau_a},
                   {"circuit", circuit},
                   {"passive_elements", static_cast<double>(m) * params.p_passive},
                   {"switches", 0.0}});
}

PowerBreakdown power_dynamic(std::size_t n_t, std::size_t n, std::size_t active_count,
                             double p_bs, double p_a, const PowerModelParams& params) {
  params.validate();
  if (active_count > n) {
    fail(ErrorCode::InvalidArgument, "power_dynamic: active count exceeds N");
  }
  const double circuit = static_cast<double>(n_t) * params.p_bs_dynamic +
                         static_cast<double>(active_count) * params.p_a_dynamic +
                         params.p_bs_static + params.p_a_static;
  return assemble(
      {{"bs_amplifier", p_bs / params.tau_bs},
       {"surface_amplifier", p_a / params.tau_a},
       {"circuit", circuit},
       {"passive_elements", static_cast<double>(n - active_count) * params.p_passive},
       {"switches", static_cast<double>(n) * params.p_switch}});
}

PowerBreakdown power_ris(std::size_t n_t, std::size_t n, double p_bs,
                         const PowerModelParams& params) {
  params.validate();
  const double circuit =
      static_cast<double>(n_t) * params.p_bs_dynamic + params.p_bs_static;
  return assemble({{"bs_amplifier", p_bs / params.tau_bs},
                   {"surface_amplifier", 0.0},
                   {"circuit", circuit},
                   {"passive_elements", static_cast<double>(n) * params.p_passive},
                   {"switches", 0.0}});
}

double delta_power_fixed(std::size_t k, double p_a, const PowerModelParams& params) {
  return p_a / params.tau_a +
         static_cast<double>(k) * (params.p_a_dynamic - params.p_passive) +
         params.p_a_static;
}

double delta_power_dynamic(std::size_t n, std::size_t active_count, double p_a,
                           const PowerModelParams& params) {
  return delta_power_fixed(active_count, p_a, params) +
         static_cast<double>(n) * params.p_switch;
}

double energy_efficiency(double se, double total_power, const PowerModelParams& params) {
  if (!(total_power > 0.0)) {
    fail(ErrorCode::NonPositivePower, "energy_efficiency: total power must be > 0");
  }
  return params.bandwidth_hz * se / total_power;
}

}  // namespace hrris::power
