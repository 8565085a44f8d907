// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_EXPERIMENT_CSV_HPP
#define HRRIS_EXPERIMENT_CSV_HPP

#include <string>
#include <vector>

#include "experiment/runner.hpp"

namespace hrris::experiment {

inline constexpr const char* kCsvHeader =
    "scheme,sweep_variable,sweep_value,mean_se_bpshz,mean_power_w,mean_ee_bpj,trials,seed";

inline constexpr const char* kVersion = "1.0.0";

std::string format_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);

void write_csv(const SweepResult& result, const std::string& path);
std::vector<ResultRow> read_csv(const std::string& path);

/// Config text that re-runs the experiment, preceded by comment lines with
/// the tool version and run statistics.
std::string format_manifest(const SweepResult& result);
void write_manifest(const SweepResult& result, const std::string& path);

}  // namespace hrris::experiment

#endif  // HRRIS_EXPERIMENT_CSV_HPP
