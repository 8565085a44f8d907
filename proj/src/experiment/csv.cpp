// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "experiment/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace hrris::experiment {

namespace {

std::string g10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing: " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

double field_double(const std::string& field, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    fail(ErrorCode::IoError, "csv line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

unsigned long long field_unsigned(const std::string& field, std::size_t line) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(field.c_str(), &end, 10);
  if (field.empty() || field[0] == '-' || end != field.c_str() + field.size()) {
    fail(ErrorCode::IoError, "csv line " + std::to_string(line) + ": bad count '" + field + "'");
  }
  return v;
}

}  // namespace

std::string format_csv(const std::vector<ResultRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.scheme + ',' + r.sweep_variable + ',' + g10(r.sweep_value) + ',' + g10(r.mean_se) +
           ',' + g10(r.mean_power_w) + ',' + g10(r.mean_ee) + ',' + std::to_string(r.trials) +
           ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::vector<ResultRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    fail(ErrorCode::IoError, "csv header mismatch");
  }
  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string item;
    std::istringstream fields(line);
    while (std::getline(fields, item, ',')) f.push_back(item);
    if (f.size() != 8) {
      fail(ErrorCode::IoError, "csv line " + std::to_string(line_no) + ": expected 8 fields");
    }
    ResultRow r;
    r.scheme = f[0];
    r.sweep_variable = f[1];
    r.sweep_value = field_double(f[2], line_no);
    r.mean_se = field_double(f[3], line_no);
    r.mean_power_w = field_double(f[4], line_no);
    r.mean_ee = field_double(f[5], line_no);
    r.trials = static_cast<std::size_t>(field_unsigned(f[6], line_no));
    r.seed = field_unsigned(f[7], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_csv(const SweepResult& result, const std::string& path) {
  write_text(format_csv(result.rows), path);
}

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_csv(buffer.str());
  } catch (const Error& e) {
    fail(ErrorCode::IoError, path + ": " + e.what());
  }
}

std::string format_manifest(const SweepResult& result) {
  std::size_t unconverged = 0;
  for (const auto& r : result.records) unconverged += r.converged ? 0 : 1;
  std::string out = std::string("# hrris-sim ") + kVersion + " run manifest\n";
  out += "# resampled_draws = " + std::to_string(result.resampled_draws) + "\n";
  out += "# unconverged_solves = " + std::to_string(unconverged) + "\n";
  out += result.spec.to_config_text();
  return out;
}

void write_manifest(const SweepResult& result, const std::string& path) {
  write_text(format_manifest(result), path);
}

}  // namespace hrris::experiment
