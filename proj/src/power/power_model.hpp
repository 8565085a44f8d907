// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_POWER_POWER_MODEL_HPP
#define HRRIS_POWER_POWER_MODEL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hrris::power {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Component power consumption. Defaults are the usual sub-6 GHz figures:
/// 40/35 dBm per BS RF chain and active element, 35/30 dBm static
/// overheads, 5 mW per passive element and per switch, 50% efficient PAs,
/// 10 MHz bandwidth.
struct PowerModelParams {
  double tau_bs = 0.5;
  double tau_a = 0.5;
  double p_bs_dynamic = 10.0;            // 40 dBm
  double p_bs_static = 3.1622776601683795;  // 35 dBm
  double p_a_dynamic = 3.1622776601683795;  // 35 dBm
  double p_a_static = 1.0;               // 30 dBm
  double p_passive = 5e-3;
  double p_switch = 5e-3;
  double bandwidth_hz = 10e6;

  void validate() const;
};

struct PowerBreakdown {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> components;

  double component(const std::string& name) const;
};

/// Fixed HR-RIS: P_BS/tau_BS + P_a/tau_a + circuit + M P_p, circuit =
/// N_t P_BS,dyn + K P_a,dyn + P_BS,static + P_a,static.
PowerBreakdown power_fixed(std::size_t n_t, std::size_t k, std::size_t m,
                           double p_bs, double p_a, const PowerModelParams& params);

/// Dynamic HR-RIS with `active_count` amplifying elements and N switches.
PowerBreakdown power_dynamic(std::size_t n_t, std::size_t n, std::size_t active_count,
                             double p_bs, double p_a, const PowerModelParams& params);

/// Passive RIS: P_BS/tau_BS + N_t P_BS,dyn + P_BS,static + N P_p.
PowerBreakdown power_ris(std::size_t n_t, std::size_t n, double p_bs,
                         const PowerModelParams& params);

/// Extra consumption of the fixed HR-RIS over an N-element RIS:
/// P_a/tau_a + K (P_a,dyn - P_p) + P_a,static.
double delta_power_fixed(std::size_t k, double p_a, const PowerModelParams& params);

/// Dynamic counterpart. Unlike the commonly quoted expression this includes
/// the N P_SW switch term, so it equals power_dynamic - power_ris exactly.
double delta_power_dynamic(std::size_t n, std::size_t active_count, double p_a,
                           const PowerModelParams& params);

/// bits per joule
double energy_efficiency(double se, double total_power, const PowerModelParams& params);

}  // namespace hrris::power

#endif  // HRRIS_POWER_POWER_MODEL_HPP
