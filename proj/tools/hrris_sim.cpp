// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers
//
// Command-line front end over the C interface.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hrris/hrris.h"

namespace {

struct Overrides {
  std::string out_dir = "results";
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::size_t threads = 0;
  bool fast = false;
  bool quiet = false;
  std::string sweep;
  std::string schemes;
  std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--out,--out-dir", o.out_dir, "Output directory for CSV and manifest");
  cmd->add_option("--trials", o.trials, "Monte-Carlo trials per point");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cmd->add_flag("--fast", o.fast, "Use 25 trials unless --trials is given");
  cmd->add_option("--sweep", o.sweep, "Sweep override, e.g. p_bs_dbm=0,10,20");
  cmd->add_option("--scheme,--schemes", o.schemes,
                  "Comma-separated scheme tokens, e.g. ris_ao,fixed_hr:pa=-10");
  cmd->add_option("--set", o.sets, "Scenario override key=value (repeatable)");
  cmd->add_flag("-q,--quiet", o.quiet, "No progress output");
}

int report(hrris_status status, const char* what) {
  std::fprintf(stderr, "hrris-sim: %s: %s (%s)\n", what, hrris_last_error(),
               hrris_status_string(status));
  return status == HRRIS_ERR_CONFIG || status == HRRIS_ERR_INVALID_ARGUMENT ? 2 : 1;
}

hrris_status apply(hrris_experiment* exp, const Overrides& o) {
  hrris_status s = HRRIS_OK;
  auto set = [&](const std::string& k, const std::string& v) {
    if (s == HRRIS_OK) s = hrris_experiment_set(exp, k.c_str(), v.c_str());
  };
  if (o.fast) set("trials", "25");
  if (o.trials) set("trials", std::to_string(*o.trials));
  if (o.seed) set("seed", std::to_string(*o.seed));
  if (!o.sweep.empty()) {
    const auto eq = o.sweep.find('=');
    if (eq == std::string::npos) {
      set("sweep", o.sweep);
    } else {
      set("sweep", o.sweep.substr(0, eq));
      set("sweep_values", o.sweep.substr(eq + 1));
    }
  }
  if (!o.schemes.empty()) set("schemes", o.schemes);
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "hrris-sim: --set expects key=value, got '%s'\n", kv.c_str());
      return HRRIS_ERR_CONFIG;
    }
    set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return s;
}

void progress(std::size_t done, std::size_t total, void*) {
  if (done == total || done % 50 == 0) {
    std::fprintf(stderr, "\r  %zu/%zu trials", done, total);
    if (done == total) std::fputc('\n', stderr);
    std::fflush(stderr);
  }
}

int execute(hrris_experiment* exp, const Overrides& o) {
  hrris_status s = apply(exp, o);
  if (s != HRRIS_OK) return report(s, "configuration");
  s = hrris_experiment_validate(exp);
  if (s != HRRIS_OK) return report(s, "configuration");

  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "hrris-sim: cannot create '%s': %s\n", o.out_dir.c_str(),
                 ec.message().c_str());
    return 1;
  }
  std::string figure = "custom";
  {
    const std::string text = hrris_experiment_describe(exp);
    const std::string key = "figure = ";
    if (text.rfind(key, 0) == 0) figure = text.substr(key.size(), text.find('\n') - key.size());
  }

  const auto start = std::chrono::steady_clock::now();
  hrris_result* result = nullptr;
  s = hrris_experiment_run(exp, o.threads, o.quiet ? nullptr : progress, nullptr, &result);
  if (s != HRRIS_OK) return report(s, "run");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto base = std::filesystem::path(o.out_dir) / figure;
  const std::string csv = base.string() + ".csv";
  const std::string manifest = base.string() + ".manifest.cfg";
  s = hrris_result_write_csv(result, csv.c_str());
  if (s == HRRIS_OK) s = hrris_result_write_manifest(result, manifest.c_str());
  if (s != HRRIS_OK) {
    hrris_result_free(result);
    return report(s, "output");
  }
  if (!o.quiet) {
    std::fprintf(stderr, "wrote %s (%zu rows, %zu resampled draws, %.1f s)\n", csv.c_str(),
                 hrris_result_row_count(result), hrris_result_resampled_draws(result), seconds);
  }
  hrris_result_free(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid relay-reflecting surface MIMO simulator"};
  app.set_version_flag("--version", std::string(hrris_version()));
  app.require_subcommand(1);

  Overrides run_opts;
  std::string figure;
  auto* run = app.add_subcommand("run", "Run a figure preset");
  run->add_option("--figure", figure, "Preset name (fig3 ... fig9)")->required();
  add_common(run, run_opts);

  Overrides sweep_opts;
  std::string config_path;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment from a config file");
  sweep->add_option("--config", config_path, "key = value config file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(sweep, sweep_opts);

  std::string show_figure;
  auto* show = app.add_subcommand("show", "Print the config text of a preset");
  show->add_option("--figure", show_figure, "Preset name")->required();

  app.add_subcommand("list", "List figure presets");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("list")) {
    std::fputs(hrris_preset_names(), stdout);
    return 0;
  }

  hrris_experiment* exp = nullptr;
  hrris_status s = HRRIS_OK;
  const Overrides* opts = nullptr;
  if (app.got_subcommand(run)) {
    s = hrris_experiment_from_preset(figure.c_str(), &exp);
    opts = &run_opts;
  } else if (app.got_subcommand(sweep)) {
    s = hrris_experiment_from_config_file(config_path.c_str(), &exp);
    opts = &sweep_opts;
  } else {
    s = hrris_experiment_from_preset(show_figure.c_str(), &exp);
    if (s != HRRIS_OK) return report(s, "preset");
    std::fputs(hrris_experiment_describe(exp), stdout);
    hrris_experiment_free(exp);
    return 0;
  }
  if (s != HRRIS_OK) return report(s, "configuration");
  const int code = execute(exp, *opts);
  hrris_experiment_free(exp);
  return code;
}
