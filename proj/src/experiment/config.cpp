// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include "experiment/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace hrris::experiment {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinite" || lower == "infinity") {
    return channel::kInfiniteKappa;
  }
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || std::isnan(v)) {
    fail(ErrorCode::ConfigError, "key '" + key + "': '" + text + "' is not a number");
  }
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  const double v = parse_double(key, text);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) {
    fail(ErrorCode::ConfigError, "key '" + key + "': '" + text + "' is not a count");
  }
  return static_cast<std::size_t>(v);
}

std::uint64_t parse_seed(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || t[0] == '-' || end != t.c_str() + t.size() || errno == ERANGE) {
    fail(ErrorCode::ConfigError, "key '" + key + "': '" + text + "' is not a seed");
  }
  return v;
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> parse_angle(const std::string& key, const std::string& text) {
  if (trim(text) == "random") return std::nullopt;
  return parse_double(key, text);
}

std::string fmt_angle(const std::optional<double>& a) {
  return a ? fmt(*a) : std::string("random");
}

}  // namespace

channel::GeometryConfig ScenarioConfig::geometry() const { return {x_h, x_ms, y_ms}; }

channel::FadingConfig ScenarioConfig::fading() const {
  return {std::pow(10.0, beta0_db / 10.0), epsilon_t, epsilon_r, kappa_t, kappa_r};
}

channel::ArrayGeometry ScenarioConfig::arrays() const {
  channel::ArrayGeometry a;
  a.n_bs = n_t;
  a.n_ms = n_r;
  a.n_surface = n;
  a.n_x = n_x;
  a.theta_bs = theta_bs;
  a.theta_h = theta_h;
  a.phi_h = phi_h;
  return a;
}

surface::SystemParams ScenarioConfig::system() const {
  return {power::dbm_to_watts(p_bs_dbm), power::dbm_to_watts(sigma2_dbm)};
}

power::PowerModelParams ScenarioConfig::power_model() const {
  power::PowerModelParams p;
  p.tau_bs = tau_bs;
  p.tau_a = tau_a;
  p.p_bs_dynamic = power::dbm_to_watts(p_bs_dynamic_dbm);
  p.p_bs_static = power::dbm_to_watts(p_bs_static_dbm);
  p.p_a_dynamic = power::dbm_to_watts(p_a_dynamic_dbm);
  p.p_a_static = power::dbm_to_watts(p_a_static_dbm);
  p.p_passive = p_passive_w;
  p.p_switch = p_switch_w;
  p.bandwidth_hz = bandwidth_hz;
  return p;
}

ao::AoOptions ScenarioConfig::ao_options() const { return {ao_tolerance, max_sweeps}; }

bool ScenarioConfig::set(const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  if (key == "n_t") n_t = parse_count(key, value);
  else if (key == "n_r") n_r = parse_count(key, value);
  else if (key == "n") n = parse_count(key, value);
  else if (key == "k") k = parse_count(key, value);
  else if (key == "n_x") n_x = parse_count(key, value);
  else if (key == "phase_bits" || key == "b") phase_bits = static_cast<unsigned>(parse_count(key, value));
  else if (key == "p_bs_dbm") p_bs_dbm = parse_double(key, value);
  else if (key == "p_a_max_dbm" || key == "pa") p_a_max_dbm = parse_double(key, value);
  else if (key == "sigma2_dbm") sigma2_dbm = parse_double(key, value);
  else if (key == "beta0_db") beta0_db = parse_double(key, value);
  else if (key == "epsilon_t") epsilon_t = parse_double(key, value);
  else if (key == "epsilon_r") epsilon_r = parse_double(key, value);
  else if (key == "kappa_t") kappa_t = parse_double(key, value);
  else if (key == "kappa_r") kappa_r = parse_double(key, value);
  else if (key == "x_h" || key == "surface_x") x_h = parse_double(key, value);
  else if (key == "x_ms") x_ms = parse_double(key, value);
  else if (key == "y_ms") y_ms = parse_double(key, value);
  else if (key == "theta_bs") theta_bs = parse_angle(key, value);
  else if (key == "theta_h") theta_h = parse_angle(key, value);
  else if (key == "phi_h") phi_h = parse_angle(key, value);
  else if (key == "p_bs_dynamic_dbm") p_bs_dynamic_dbm = parse_double(key, value);
  else if (key == "p_bs_static_dbm") p_bs_static_dbm = parse_double(key, value);
  else if (key == "p_a_dynamic_dbm") p_a_dynamic_dbm = parse_double(key, value);
  else if (key == "p_a_static_dbm") p_a_static_dbm = parse_double(key, value);
  else if (key == "p_passive_w") p_passive_w = parse_double(key, value);
  else if (key == "p_switch_w") p_switch_w = parse_double(key, value);
  else if (key == "tau_bs") tau_bs = parse_double(key, value);
  else if (key == "tau_a") tau_a = parse_double(key, value);
  else if (key == "bandwidth_hz") bandwidth_hz = parse_double(key, value);
  else if (key == "max_sweeps") max_sweeps = parse_count(key, value);
  else if (key == "ao_tolerance") ao_tolerance = parse_double(key, value);
  else return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> ScenarioConfig::entries() const {
  return {
      {"n_t", std::to_string(n_t)},
      {"n_r", std::to_string(n_r)},
      {"n", std::to_string(n)},
      {"k", std::to_string(k)},
      {"n_x", std::to_string(n_x)},
      {"phase_bits", std::to_string(phase_bits)},
      {"p_bs_dbm", fmt(p_bs_dbm)},
      {"p_a_max_dbm", fmt(p_a_max_dbm)},
      {"sigma2_dbm", fmt(sigma2_dbm)},
      {"beta0_db", fmt(beta0_db)},
      {"epsilon_t", fmt(epsilon_t)},
      {"epsilon_r", fmt(epsilon_r)},
      {"kappa_t", fmt(kappa_t)},
      {"kappa_r", fmt(kappa_r)},
      {"x_h", fmt(x_h)},
      {"x_ms", fmt(x_ms)},
      {"y_ms", fmt(y_ms)},
      {"theta_bs", fmt_angle(theta_bs)},
      {"theta_h", fmt_angle(theta_h)},
      {"phi_h", fmt_angle(phi_h)},
      {"p_bs_dynamic_dbm", fmt(p_bs_dynamic_dbm)},
      {"p_bs_static_dbm", fmt(p_bs_static_dbm)},
      {"p_a_dynamic_dbm", fmt(p_a_dynamic_dbm)},
      {"p_a_static_dbm", fmt(p_a_static_dbm)},
      {"p_passive_w", fmt(p_passive_w)},
      {"p_switch_w", fmt(p_switch_w)},
      {"tau_bs", fmt(tau_bs)},
      {"tau_a", fmt(tau_a)},
      {"bandwidth_hz", fmt(bandwidth_hz)},
      {"max_sweeps", std::to_string(max_sweeps)},
      {"ao_tolerance", fmt(ao_tolerance)},
  };
}

const char* scheme_name(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::RisRandom: return "ris_random";
    case SchemeKind::RisAo: return "ris_ao";
    case SchemeKind::RisK: return "ris_k";
    case SchemeKind::FixedHr: return "fixed_hr";
    case SchemeKind::DynamicHr: return "dynamic_hr";
    case SchemeKind::Relay: return "relay";
    case SchemeKind::ExhaustiveFixed: return "exhaustive_fixed";
    case SchemeKind::ExhaustiveDynamic: return "exhaustive_dynamic";
  }
  return "?";
}

SchemeSpec SchemeSpec::parse(const std::string& token) {
  const auto parts = split(token, ':');
  if (parts.empty()) fail(ErrorCode::ConfigError, "empty scheme token");
  SchemeSpec spec;
  spec.label = trim(token);
  if (spec.label.find_first_of(", \t\"") != std::string::npos) {
    fail(ErrorCode::ConfigError, "scheme token '" + token + "' contains separators");
  }
  bool known = false;
  for (auto kind : {SchemeKind::RisRandom, SchemeKind::RisAo, SchemeKind::RisK,
                    SchemeKind::FixedHr, SchemeKind::DynamicHr, SchemeKind::Relay,
                    SchemeKind::ExhaustiveFixed, SchemeKind::ExhaustiveDynamic}) {
    if (parts[0] == scheme_name(kind)) {
      spec.kind = kind;
      known = true;
    }
  }
  if (!known) fail(ErrorCode::ConfigError, "unknown scheme '" + parts[0] + "'");
  ScenarioConfig probe;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::ConfigError, "scheme override '" + parts[i] + "' needs key=value");
    }
    std::string key = trim(parts[i].substr(0, eq));
    std::string value = trim(parts[i].substr(eq + 1));
    if (!probe.set(key, value)) {
      fail(ErrorCode::ConfigError, "scheme override key '" + key + "' is unknown");
    }
    spec.overrides.emplace_back(std::move(key), std::move(value));
  }
  return spec;
}

const char* sweep_name(SweepVariable v) noexcept {
  switch (v) {
    case SweepVariable::PBsDbm: return "p_bs_dbm";
    case SweepVariable::PaMaxDbm: return "p_a_max_dbm";
    case SweepVariable::K: return "k";
    case SweepVariable::N: return "n";
    case SweepVariable::SurfaceX: return "surface_x";
  }
  return "?";
}

SweepVariable parse_sweep_variable(const std::string& name) {
  const std::string n = trim(name);
  for (auto v : {SweepVariable::PBsDbm, SweepVariable::PaMaxDbm, SweepVariable::K,
                 SweepVariable::N, SweepVariable::SurfaceX}) {
    if (n == sweep_name(v)) return v;
  }
  fail(ErrorCode::ConfigError, "unknown sweep variable '" + name + "'");
}

ScenarioConfig ExperimentSpec::resolve(const SchemeSpec& scheme, double value) const {
  ScenarioConfig c = base;
  for (const auto& [key, v] : scheme.overrides) c.set(key, v);
  switch (sweep_variable) {
    case SweepVariable::PBsDbm: c.p_bs_dbm = value; break;
    case SweepVariable::PaMaxDbm: c.p_a_max_dbm = value; break;
    case SweepVariable::K: c.k = static_cast<std::size_t>(value); break;
    case SweepVariable::N: c.n = static_cast<std::size_t>(value); break;
    case SweepVariable::SurfaceX: c.x_h = value; break;
  }
  return c;
}

void ExperimentSpec::validate() const {
  if (schemes.empty()) fail(ErrorCode::ConfigError, "no schemes selected");
  if (sweep_values.empty()) fail(ErrorCode::ConfigError, "sweep_values must be nonempty");
  if (trials < 1) fail(ErrorCode::ConfigError, "trials must be >= 1");
  const bool integral = sweep_variable == SweepVariable::K || sweep_variable == SweepVariable::N;
  for (double v : sweep_values) {
    if (!std::isfinite(v) || (integral && (v < 0.0 || v != std::floor(v)))) {
      fail(ErrorCode::ConfigError, std::string("invalid value for sweep ") +
                                       sweep_name(sweep_variable) + ": " + fmt(v));
    }
  }
  for (const auto& scheme : schemes) {
    for (double v : sweep_values) {
      const ScenarioConfig c = resolve(scheme, v);
      const std::string where = "scheme " + scheme.label + " at " +
                                sweep_name(sweep_variable) + "=" + fmt(v) + ": ";
      if (c.n_t == 0 || c.n_r == 0 || c.n == 0) {
        fail(ErrorCode::ConfigError, where + "antenna and element counts must be >= 1");
      }
      if (c.k > c.n) fail(ErrorCode::ConfigError, where + "K exceeds N");
      if (c.n_x > c.n) fail(ErrorCode::ConfigError, where + "n_x exceeds N");
      if (c.phase_bits > 16) fail(ErrorCode::ConfigError, where + "phase_bits above 16");
      if (c.max_sweeps == 0) fail(ErrorCode::ConfigError, where + "max_sweeps must be >= 1");
      if (!(c.x_h >= 1.0) || !(std::hypot(c.x_h - c.x_ms, c.y_ms) >= 1.0)) {
        fail(ErrorCode::ConfigError, where + "link distances must be >= 1 m");
      }
      try {
        c.fading().validate();
        c.power_model().validate();
      } catch (const Error& e) {
        fail(ErrorCode::ConfigError, where + e.what());
      }
      switch (scheme.kind) {
        case SchemeKind::DynamicHr:
        case SchemeKind::ExhaustiveDynamic:
          if (c.k == 0) fail(ErrorCode::ConfigError, where + "dynamic HR-RIS needs K >= 1");
          break;
        case SchemeKind::RisK:
        case SchemeKind::Relay:
          if (c.k == 0) fail(ErrorCode::ConfigError, where + "K-element baselines need K >= 1");
          break;
        default:
          break;
      }
      if ((scheme.kind == SchemeKind::ExhaustiveFixed ||
           scheme.kind == SchemeKind::ExhaustiveDynamic) &&
          c.phase_bits == 0) {
        fail(ErrorCode::ConfigError, where + "exhaustive search needs phase_bits >= 1");
      }
    }
  }
}

bool ExperimentSpec::set(const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  if (key == "figure") {
    figure_id = trim(value);
  } else if (key == "schemes" || key == "scheme") {
    schemes.clear();
    for (const auto& token : split(value, ',')) schemes.push_back(SchemeSpec::parse(token));
  } else if (key == "sweep" || key == "sweep_variable") {
    sweep_variable = parse_sweep_variable(value);
  } else if (key == "sweep_values") {
    sweep_values.clear();
    for (const auto& token : split(value, ',')) sweep_values.push_back(parse_double(key, token));
  } else if (key == "trials") {
    trials = parse_count(key, value);
  } else if (key == "seed") {
    seed = parse_seed(key, value);
  } else if (key == "threads") {
    threads = parse_count(key, value);
  } else {
    return base.set(key, value);
  }
  return true;
}

std::string ExperimentSpec::to_config_text() const {
  std::ostringstream out;
  out << "figure = " << figure_id << "\n";
  out << "schemes = ";
  for (std::size_t i = 0; i < schemes.size(); ++i) out << (i ? "," : "") << schemes[i].label;
  out << "\nsweep = " << sweep_name(sweep_variable) << "\n";
  out << "sweep_values = ";
  for (std::size_t i = 0; i < sweep_values.size(); ++i) out << (i ? "," : "") << fmt(sweep_values[i]);
  out << "\ntrials = " << trials << "\n";
  out << "seed = " << seed << "\n";
  for (const auto& [key, value] : base.entries()) out << key << " = " << value << "\n";
  return out.str();
}

namespace {

std::vector<double> range(double from, double to, double step) {
  std::vector<double> out;
  for (double v = from; v <= to + 1e-9; v += step) out.push_back(v);
  return out;
}

std::vector<SchemeSpec> schemes_of(const std::vector<std::string>& tokens) {
  std::vector<SchemeSpec> out;
  for (const auto& t : tokens) out.push_back(SchemeSpec::parse(t));
  return out;
}

std::vector<std::string> per_budget(const std::vector<std::string>& kinds) {
  std::vector<std::string> out;
  for (const char* pa : {"-10", "0", "10"})
    for (const auto& kind : kinds) out.push_back(kind + ":pa=" + pa);
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

ExperimentSpec preset(const std::string& figure_id) {
  ExperimentSpec spec;
  spec.figure_id = figure_id;
  spec.trials = 100;
  spec.seed = 1;
  ScenarioConfig& b = spec.base;

  if (figure_id == "fig3") {
    // Small surface against exhaustive search.
    b.n_t = 4;
    b.n_r = 2;
    b.n = 4;
    b.k = 1;
    spec.sweep_variable = SweepVariable::PBsDbm;
    spec.sweep_values = range(0.0, 40.0, 5.0);
    spec.schemes = schemes_of(
        per_budget({"fixed_hr", "exhaustive_fixed", "dynamic_hr", "exhaustive_dynamic"}));
  } else if (figure_id == "fig4" || figure_id == "fig8") {
    // SE (fig4) and EE (fig8) versus BS transmit power.
    spec.sweep_variable = SweepVariable::PBsDbm;
    spec.sweep_values = range(0.0, 40.0, 5.0);
    auto tokens = std::vector<std::string>{"ris_random", "ris_ao"};
    for (auto& t : per_budget({"fixed_hr", "dynamic_hr"})) tokens.push_back(t);
    spec.schemes = schemes_of(tokens);
  } else if (figure_id == "fig5") {
    // Surface placement for two MS positions.
    b.k = 4;
    b.p_a_max_dbm = 0.0;
    spec.sweep_variable = SweepVariable::SurfaceX;
    spec.sweep_values = range(10.0, 100.0, 10.0);
    spec.schemes = schemes_of({"ris_ao:x_ms=40", "fixed_hr:x_ms=40", "dynamic_hr:x_ms=40",
                               "ris_ao:x_ms=100", "fixed_hr:x_ms=100",
                               "dynamic_hr:x_ms=100"});
  } else if (figure_id == "fig6" || figure_id == "fig9") {
    // SE (fig6) and power/EE (fig9) versus the number of active elements.
    spec.sweep_variable = SweepVariable::K;
    spec.sweep_values = range(1.0, 50.0, 1.0);
    auto tokens = std::vector<std::string>{"ris_random", "ris_ao", "ris_k"};
    for (auto& t : per_budget({"relay", "fixed_hr", "dynamic_hr"})) tokens.push_back(t);
    spec.schemes = schemes_of(tokens);
  } else if (figure_id == "fig7") {
    spec.sweep_variable = SweepVariable::N;
    spec.sweep_values = range(20.0, 200.0, 20.0);
    auto tokens = std::vector<std::string>{"ris_random", "ris_ao"};
    for (auto& t : per_budget({"fixed_hr", "dynamic_hr"})) tokens.push_back(t);
    spec.schemes = schemes_of(tokens);
  } else {
    fail(ErrorCode::ConfigError, "unknown figure preset '" + figure_id + "'");
  }
  return spec;
}

ExperimentSpec parse_config_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  ExperimentSpec spec;
  for (const auto& [key, value] : pairs) {
    if (key == "figure") {
      const auto names = preset_names();
      if (std::find(names.begin(), names.end(), value) != names.end()) {
        spec = preset(value);
      }
    }
  }
  for (const auto& [key, value] : pairs) {
    if (!spec.set(key, value)) fail(ErrorCode::ConfigError, "unknown key '" + key + "'");
  }
  return spec;
}

ExperimentSpec load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config_text(buffer.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

}  // namespace hrris::experiment
