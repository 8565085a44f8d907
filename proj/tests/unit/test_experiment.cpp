// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "doctest.h"
#include "experiment/config.hpp"
#include "experiment/csv.hpp"
#include "experiment/runner.hpp"

using namespace hrris;
using namespace hrris::experiment;

namespace {

ExperimentSpec small_spec() {
  ExperimentSpec s = parse_config_text(
      "# small link\n"
      "schemes = ris_ao, dynamic_hr, fixed_hr:pa=-5\n"
      "sweep = p_bs_dbm\n"
      "sweep_values = 10, 30\n"
      "trials = 3\n"
      "seed = 77\n"
      "n_t = 4\nn = 6\nk = 2\n");
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    const auto spec = preset(name);
    CHECK(spec.figure_id == name);
    CHECK(spec.trials == 100);
    CHECK_NOTHROW(spec.validate());
  }
  const auto fig3 = preset("fig3");
  CHECK(fig3.base.n_t == 4);
  CHECK(fig3.base.n == 4);
  CHECK(fig3.base.k == 1);
  CHECK(fig3.schemes.size() == 12);
  const auto fig6 = preset("fig6");
  CHECK(fig6.sweep_variable == SweepVariable::K);
  CHECK(fig6.sweep_values.size() == 50);
  CHECK(fig6.sweep_values.back() == 50.0);
  CHECK(fig6.base.p_bs_dbm == 30.0);
  CHECK(code_of([] { preset("fig99"); }) == ErrorCode::ConfigError);
}

TEST_CASE("scenario defaults") {
  const ScenarioConfig c;
  CHECK(c.system().sigma2 == doctest::Approx(1e-11));
  CHECK(c.system().p_bs == doctest::Approx(1.0));
  CHECK(c.fading().beta0 == doctest::Approx(1e-3));
  CHECK(c.geometry().surface_ms_distance() == doctest::Approx(std::sqrt(125.0)));
  CHECK(c.power_model().p_bs_dynamic == doctest::Approx(10.0));
}

TEST_CASE("scheme tokens") {
  const auto s = SchemeSpec::parse("fixed_hr:pa=-10:x_ms=100");
  CHECK(s.kind == SchemeKind::FixedHr);
  CHECK(s.label == "fixed_hr:pa=-10:x_ms=100");
  REQUIRE(s.overrides.size() == 2);
  ExperimentSpec spec;
  spec.schemes = {s};
  spec.sweep_values = {25.0};
  const auto resolved = spec.resolve(s, 25.0);
  CHECK(resolved.p_a_max_dbm == -10.0);
  CHECK(resolved.x_ms == 100.0);
  CHECK(resolved.p_bs_dbm == 25.0);
  CHECK(code_of([] { SchemeSpec::parse("teleport"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { SchemeSpec::parse("ris_ao:bogus=1"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { SchemeSpec::parse("ris_ao:pa"); }) == ErrorCode::ConfigError);
}

TEST_CASE("config text round trip") {
  for (const auto& name : preset_names()) {
    const auto spec = preset(name);
    const auto text = spec.to_config_text();
    CHECK(parse_config_text(text).to_config_text() == text);
  }
  auto spec = small_spec();
  spec.base.theta_bs = 0.3;
  spec.base.kappa_r = 2.5;
  CHECK(parse_config_text(spec.to_config_text()).to_config_text() == spec.to_config_text());
  // A figure key loads the preset, later keys override it.
  const auto over = parse_config_text("figure = fig4\ntrials = 7\n");
  CHECK(over.trials == 7);
  CHECK(over.schemes.size() == preset("fig4").schemes.size());
}

TEST_CASE("config errors") {
  CHECK(code_of([] { parse_config_text("trials 3\n"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_config_text("unknown_key = 3\n"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_config_text("trials = many\n"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { load_config_file("/nonexistent/file.cfg"); }) == ErrorCode::IoError);
  auto spec = small_spec();
  spec.sweep_variable = SweepVariable::K;
  spec.sweep_values = {7.0};
  CHECK(code_of([&] { spec.validate(); }) == ErrorCode::ConfigError);
  spec.sweep_values = {};
  CHECK(code_of([&] { spec.validate(); }) == ErrorCode::ConfigError);
  spec = small_spec();
  spec.trials = 0;
  CHECK(code_of([&] { spec.validate(); }) == ErrorCode::ConfigError);
  spec = small_spec();
  spec.schemes = {SchemeSpec::parse("exhaustive_fixed:b=0")};
  CHECK(code_of([&] { spec.validate(); }) == ErrorCode::ConfigError);
}

TEST_CASE("runs are deterministic and independent of threads and scheme order") {
  const auto spec = small_spec();
  const auto a = run_experiment(spec, 1);
  const auto b = run_experiment(spec, 1);
  const auto c = run_experiment(spec, 3);
  CHECK(format_csv(a.rows) == format_csv(b.rows));
  CHECK(format_csv(a.rows) == format_csv(c.rows));
  REQUIRE(a.rows.size() == 6);
  CHECK(a.rows[0].scheme == "ris_ao");
  CHECK(a.rows[1].sweep_value == 30.0);
  CHECK(a.records.size() == 18);

  auto reversed = spec;
  std::reverse(reversed.schemes.begin(), reversed.schemes.end());
  const auto r = run_experiment(reversed, 2);
  for (const auto& row : a.rows) {
    const auto it = std::find_if(r.rows.begin(), r.rows.end(), [&](const ResultRow& x) {
      return x.scheme == row.scheme && x.sweep_value == row.sweep_value;
    });
    REQUIRE(it != r.rows.end());
    CHECK(it->mean_se == row.mean_se);
    CHECK(it->mean_power_w == row.mean_power_w);
  }
}

TEST_CASE("paired trials see identical channels") {
  const auto spec = small_spec();
  const auto result = run_experiment(spec, 1);
  for (std::size_t p = 0; p < spec.sweep_values.size(); ++p)
    for (std::size_t t = 0; t < spec.trials; ++t) {
      const auto& ris = result.record(0, p, t);
      const auto& dyn = result.record(1, p, t);
      CHECK(dyn.spectral_efficiency >= ris.spectral_efficiency - 1e-9);
    }
  const auto s1 = trial_streams(77, 1, 0);
  const auto s2 = trial_streams(77, 1, 0);
  const auto scenario = spec.resolve(spec.schemes[0], 10.0);
  const auto c1 = trial_channels(scenario, s1);
  const auto c2 = trial_channels(spec.resolve(spec.schemes[2], 30.0), s2);
  CHECK((c1.h_r - c2.h_r).max_abs() == 0.0);
  CHECK((c1.h_t - c2.h_t).max_abs() == 0.0);
  CHECK((trial_channels(scenario, trial_streams(77, 2, 0)).h_r - c1.h_r).max_abs() > 0.0);
}

TEST_CASE("power accounting per scheme") {
  auto spec = small_spec();
  spec.schemes = {SchemeSpec::parse("ris_ao"), SchemeSpec::parse("fixed_hr"),
                  SchemeSpec::parse("dynamic_hr"), SchemeSpec::parse("relay"),
                  SchemeSpec::parse("ris_k")};
  spec.sweep_values = {30.0};
  spec.trials = 1;
  const auto r = run_experiment(spec, 1);
  const auto pm = spec.base.power_model();
  CHECK(r.record(0, 0, 0).power_w == doctest::Approx(power::power_ris(4, 6, 1.0, pm).total));
  CHECK(r.record(4, 0, 0).power_w == doctest::Approx(power::power_ris(4, 2, 1.0, pm).total));
  const auto& fixed = r.record(1, 0, 0);
  CHECK(fixed.active_power_w == doctest::Approx(1e-3));
  CHECK(fixed.power_w == doctest::Approx(power::power_fixed(4, 2, 4, 1.0, 1e-3, pm).total));
  const auto& relay = r.record(3, 0, 0);
  CHECK(relay.active_count == 2);
  CHECK(relay.power_w == doctest::Approx(power::power_fixed(4, 2, 0, 1.0, relay.active_power_w, pm).total));
  const auto& dyn = r.record(2, 0, 0);
  CHECK(dyn.power_w == doctest::Approx(
                           power::power_dynamic(4, 6, dyn.active_count, 1.0, dyn.active_power_w, pm).total));
  CHECK(dyn.energy_efficiency == doctest::Approx(1e7 * dyn.spectral_efficiency / dyn.power_w));
}

TEST_CASE("csv format and parse-back") {
  CHECK(format_csv({}) == std::string(kCsvHeader) + "\n");
  ResultRow row{"fixed_hr:pa=0", "p_bs_dbm", 20.0, 9.123456789012, 329.5715553, 276543.21, 100, 1};
  const auto text = format_csv({row});
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("9.123456789,") != std::string::npos);
  const auto parsed = parse_csv(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].scheme == row.scheme);
  CHECK(parsed[0].mean_se == doctest::Approx(row.mean_se).epsilon(1e-9));
  CHECK(parsed[0].trials == 100);
  CHECK(code_of([] { parse_csv("bad,header\n"); }) == ErrorCode::IoError);

  const auto result = run_experiment(small_spec(), 1);
  const auto dir = std::filesystem::temp_directory_path() / "hrris_csv_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.csv").string();
  write_csv(result, path);
  const auto back = read_csv(path);
  REQUIRE(back.size() == result.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].scheme == result.rows[i].scheme);
    CHECK(back[i].mean_se == doctest::Approx(result.rows[i].mean_se).epsilon(1e-9));
    CHECK(back[i].mean_ee == doctest::Approx(result.rows[i].mean_ee).epsilon(1e-9));
  }
  CHECK(code_of([&] { write_csv(result, "/nonexistent/dir/out.csv"); }) == ErrorCode::IoError);

  const auto manifest = format_manifest(result);
  CHECK(manifest.rfind("# hrris-sim", 0) == 0);
  CHECK(parse_config_text(manifest).to_config_text() == result.spec.to_config_text());
  std::filesystem::remove_all(dir);
}
