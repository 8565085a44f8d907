// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ao/solvers.hpp"
#include "ao/waterfill.hpp"
#include "experiment/runner.hpp"
#include "power/power_model.hpp"
#include "../support/fixtures.hpp"

using namespace hrris;
using namespace hrris::experiment;

namespace {

struct Outcome {
  int id;
  bool pass;
  std::string summary;
};

std::vector<Outcome> g_outcomes;

void report(int id, bool pass, const std::string& summary) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", summary.c_str());
  std::fflush(stdout);
  g_outcomes.push_back({id, pass, summary});
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Mean SE of `scheme` at `value`, looked up by label.
double mean_se(const SweepResult& r, const std::string& scheme, double value) {
  for (const auto& row : r.rows)
    if (row.scheme == scheme && row.sweep_value == value) return row.mean_se;
  std::fprintf(stderr, "missing row %s @ %g\n", scheme.c_str(), value);
  std::abort();
}

std::size_t scheme_index(const ExperimentSpec& spec, const std::string& label) {
  for (std::size_t i = 0; i < spec.schemes.size(); ++i)
    if (spec.schemes[i].label == label) return i;
  std::fprintf(stderr, "missing scheme %s\n", label.c_str());
  std::abort();
}

SweepResult timed_run(const ExperimentSpec& spec, const char* what) {
  const auto start = std::chrono::steady_clock::now();
  auto r = run_experiment(spec);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("  [run] %-28s %zu schemes x %zu points x %zu trials in %.1f s\n", what,
              spec.schemes.size(), spec.sweep_values.size(), spec.trials, s);
  std::fflush(stdout);
  return r;
}

// ---------------------------------------------------------------------------

void criterion1(const SweepResult& fig3) {
  double worst = 0.0;
  std::string where;
  for (const char* pa : {"-10", "0", "10"}) {
    for (const auto& [ao, ex] : {std::pair{"fixed_hr", "exhaustive_fixed"},
                                 std::pair{"dynamic_hr", "exhaustive_dynamic"}}) {
      for (double v : fig3.spec.sweep_values) {
        const double a = mean_se(fig3, std::string(ao) + ":pa=" + pa, v);
        const double e = mean_se(fig3, std::string(ex) + ":pa=" + pa, v);
        const double gap = std::abs(e - a) / e;
        if (gap > worst) {
          worst = gap;
          where = fmt("%s pa=%s P_BS=%g dBm (AO %.4f vs optimum %.4f)", ao, pa, v, a, e);
        }
      }
    }
  }
  report(1, worst <= 0.02,
         fmt("toy-scale AO within 2%% of exhaustive search; worst gap %.3f%% at %s", 100 * worst,
             where.c_str()));
}

void criterion2(const SweepResult& fig4) {
  const double ris30 = mean_se(fig4, "ris_ao", 30.0);
  const double fixed20 = mean_se(fig4, "fixed_hr:pa=0", 20.0);
  const double dyn15 = mean_se(fig4, "dynamic_hr:pa=0", 15.0);
  const bool pass = fixed20 >= ris30 && dyn15 >= ris30;
  report(2, pass,
         fmt("BS power saving at P_a^max=0 dBm: fixed@20 dBm %.4f, dynamic@15 dBm %.4f vs "
             "AO-RIS@30 dBm %.4f",
             fixed20, dyn15, ris30));
  // Where the curves actually cross, for the record.
  const auto& values = fig4.spec.sweep_values;
  for (const char* scheme : {"fixed_hr:pa=0", "dynamic_hr:pa=0"}) {
    for (double v : values) {
      if (mean_se(fig4, scheme, v) >= ris30) {
        std::printf("    %s first reaches AO-RIS@30 dBm at P_BS=%g dBm (saving %g dB)\n", scheme,
                    v, 30.0 - v);
        break;
      }
    }
  }
}

void criterion3(const SweepResult& fig6) {
  const double ris = mean_se(fig6, "ris_ao", 1.0);
  bool pass = true;
  std::string detail = fmt("AO-RIS %.4f;", ris);
  for (const char* pa : {"0", "10"}) {
    for (const char* kind : {"fixed_hr", "dynamic_hr"}) {
      const double se = mean_se(fig6, std::string(kind) + ":pa=" + pa, 1.0);
      pass = pass && se > ris;
      detail += fmt(" %s:pa=%s %.4f;", kind, pa, se);
    }
  }
  report(3, pass, "K=1 HR-RIS beats AO-RIS at P_BS=30 dBm: " + detail);
}

// Returns (pairs checked, violations, worst deficit).
struct Dominance {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double worst = 0.0;
};

void dominance(const SweepResult& r, Dominance& d) {
  const auto& spec = r.spec;
  for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
    const auto& scheme = spec.schemes[s];
    if (scheme.kind != SchemeKind::DynamicHr) continue;
    std::string partner = "ris_ao";
    for (const auto& [k, v] : scheme.overrides)
      if (k != "pa" && k != "p_a_max_dbm") partner += ":" + k + "=" + v;
    const std::size_t ris = scheme_index(spec, partner);
    for (std::size_t p = 0; p < spec.sweep_values.size(); ++p)
      for (std::size_t t = 0; t < spec.trials; ++t) {
        const double deficit = r.record(ris, p, t).spectral_efficiency -
                               r.record(s, p, t).spectral_efficiency;
        ++d.pairs;
        d.worst = std::max(d.worst, deficit);
        if (deficit > 1e-9) ++d.violations;
      }
  }
}

// Keeps ris_ao partners and dynamic schemes; paired seeding makes the
// numbers identical to a full-preset run.
ExperimentSpec dominance_subset(ExperimentSpec spec) {
  std::vector<SchemeSpec> keep;
  for (const auto& s : spec.schemes) {
    if (s.kind != SchemeKind::DynamicHr) continue;
    std::string partner = "ris_ao";
    for (const auto& [k, v] : s.overrides)
      if (k != "pa" && k != "p_a_max_dbm") partner += ":" + k + "=" + v;
    if (std::none_of(keep.begin(), keep.end(), [&](const SchemeSpec& x) { return x.label == partner; }))
      keep.push_back(SchemeSpec::parse(partner));
    keep.push_back(s);
  }
  spec.schemes = keep;
  return spec;
}

void criterion5() {
  std::mt19937_64 gen(505);
  std::uniform_int_distribution<int> pick(0, 1 << 30);
  std::size_t instances = 0, violations = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    ScenarioConfig c;
    c.n_t = 2 + rep % 7;
    c.n_r = 1 + rep % 3;
    c.n = 4 + rep % 13;
    c.phase_bits = 0;
    c.p_bs_dbm = -10.0 + 50.0 * (pick(gen) / double(1 << 30));
    c.p_a_max_dbm = -20.0 + 30.0 * (pick(gen) / double(1 << 30));
    c.kappa_t = (rep % 4 == 0) ? 1.0 : channel::kInfiniteKappa;
    const auto streams = trial_streams(5, static_cast<std::size_t>(rep), 0);
    const auto ch = trial_channels(c, streams);
    surface::SurfaceConfig sc;
    sc.n = c.n;
    sc.phase_bits = 0;
    sc.p_a_max = power::dbm_to_watts(c.p_a_max_dbm);
    switch (rep % 3) {
      case 0: sc.mode = surface::Mode::Ris; sc.k = 0; break;
      case 1: sc.mode = surface::Mode::FixedHr; sc.k = 1 + rep % 3; break;
      default: sc.mode = surface::Mode::FixedHr; sc.k = c.n / 2; break;
    }
    const auto report = ao::solve_fixed(ch, c.system(), sc, streams.init, c.ao_options());
    ++instances;
    for (std::size_t s = 1; s < report.objective_trace.size(); ++s) {
      const double drop = report.objective_trace[s - 1] - report.objective_trace[s];
      worst = std::max(worst, drop);
      if (drop > 1e-9) ++violations;
    }
  }
  report(5, violations == 0,
         fmt("continuous-phase objective traces non-decreasing on %zu instances; largest drop "
             "%.3g (tol 1e-9)",
             instances, worst));
}

void criterion6() {
  std::mt19937_64 gen(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  std::size_t tuples = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rep % 7, nt = 1 + rep % 4, nr = 1 + (rep / 4) % 4;
    oracle::Channels ch;
    surface::SystemParams params;
    if (rep % 2 == 0) {
      // Unit-scale channels.
      ch = oracle::random_channels(gen, n, nt, nr, 0.3 + u(gen), 0.3 + u(gen));
      params = {0.5 + u(gen), 0.5 + u(gen)};
    } else {
      // Simulation-scale channels from the link model.
      ScenarioConfig c;
      c.n_t = nt;
      c.n_r = nr;
      c.n = n;
      c.p_bs_dbm = 40.0 * u(gen);
      const auto pair = trial_channels(c, trial_streams(6, static_cast<std::size_t>(rep), 0));
      ch.n = n;
      ch.nt = nt;
      ch.nr = nr;
      ch.h_t.assign(pair.h_t.entries().begin(), pair.h_t.entries().end());
      ch.h_r.assign(pair.h_r.entries().begin(), pair.h_r.entries().end());
      params = c.system();
    }
    const auto pair = fixture::to_pair(ch);
    const std::size_t k = static_cast<std::size_t>(rep) % (n + 1);
    auto state = fixture::random_state(gen, n, k, rep % 2 == 0 ? 3.0 : 60.0);
    const std::size_t idx = static_cast<std::size_t>(gen() % n);
    const auto terms = ao::element_terms(idx, state, pair, params);
    const bool active = state.is_active(idx);
    const double amp = active ? (rep % 3 == 0 ? state.amplitude(idx) : 0.1 + 80.0 * u(gen)) : 1.0;
    const linalg::cplx alpha = std::polar(amp, 2 * std::numbers::pi * u(gen));
    const double expected = oracle::per_element_gain(ch, fixture::coefficients(state),
                                                     fixture::active_mask(state), params.rho(),
                                                     idx, alpha);
    const double got = ao::g_n(alpha, terms);
    worst = std::max(worst, std::abs(got - expected) / std::max(std::abs(expected), 1.0));
    ++tuples;
  }
  report(6, worst <= 1e-9,
         fmt("closed-form g_n vs determinant difference on %zu tuples; worst error %.3g "
             "relative to max(|g_n|, 1) (tol 1e-9)",
             tuples, worst));
}

// Concave separable objective on a simplex: best point of a coarse grid,
// then pairwise transfers until no pair improves.
double waterfill_oracle(const std::vector<ao::WaterfillCandidate>& c, double budget) {
  const std::size_t n = c.size();
  const int steps = 24;
  std::vector<double> best(n, budget / n), p(n);
  double best_val = ao::waterfill_objective(c, best);
  std::vector<int> q(n, 0);
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      q[i] = left;
      for (std::size_t j = 0; j < n; ++j) p[j] = budget * q[j] / steps;
      const double v = ao::waterfill_objective(c, p);
      if (v > best_val) {
        best_val = v;
        best = p;
      }
      return;
    }
    for (int a = 0; a <= left; ++a) {
      q[i] = a;
      self(self, i + 1, left - a);
    }
  };
  visit(visit, 0, steps);

  for (int sweep = 0; sweep < 200; ++sweep) {
    double gain = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        // Move t from j to i, t in [-p_i, p_j]; golden-section search.
        double lo = -best[i], hi = best[j];
        auto f = [&](double t) {
          auto x = best;
          x[i] += t;
          x[j] -= t;
          return ao::waterfill_objective(c, x);
        };
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * budget; ++it) {
          const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
          if (f(m1) < f(m2)) lo = m1; else hi = m2;
        }
        const double t = 0.5 * (lo + hi);
        const double before = ao::waterfill_objective(c, best);
        if (f(t) > before) {
          best[i] += t;
          best[j] -= t;
          gain += ao::waterfill_objective(c, best) - before;
        }
      }
    if (gain < 1e-15) break;
  }
  return ao::waterfill_objective(c, best);
}

void criterion7() {
  std::mt19937_64 gen(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_gap = 0.0;
  std::size_t kkt_failures = 0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<ao::WaterfillCandidate> c;
    for (std::size_t i = 0; i < 5; ++i) c.push_back({i, 0.05 + 3.0 * u(gen), 0.05 + 2.0 * u(gen)});
    const double budget = 0.05 + 2.0 * u(gen);
    const auto r = ao::waterfill(c, budget);
    const double got = ao::waterfill_objective(c, r.allocations);
    const double ref = waterfill_oracle(c, budget);
    worst_gap = std::max(worst_gap, std::abs(got - ref));
    // KKT: budget met, nonnegative, one water level for the active set,
    // floors at or above the level for inactive candidates.
    bool ok = std::abs(r.total() - budget) <= 1e-9 * budget;
    const double level = 1.0 / r.water_level_inverse;
    for (std::size_t i = 0; i < 5; ++i) {
      const double floor = c[i].xi / c[i].zeta;
      ok = ok && r.allocations[i] >= 0.0;
      if (r.allocations[i] > 0.0) ok = ok && std::abs(r.allocations[i] + floor - level) <= 1e-9 * (1.0 + level);
      else ok = ok && floor >= level - 1e-9 * (1.0 + level);
    }
    if (!ok) ++kkt_failures;
  }
  report(7, worst_gap <= 1e-6 && kkt_failures == 0,
         fmt("water-filling vs grid-plus-refinement oracle on 100 instances: worst objective gap "
             "%.3g (tol 1e-6); KKT failures %zu",
             worst_gap, kkt_failures));
}

void criterion8() {
  std::mt19937_64 gen(808);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t order_fail = 0, empty_fail = 0, empty_count = 0;
  double worst_empty = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    ScenarioConfig c;
    c.n_t = 1 + rep % 8;
    c.n_r = 1 + rep % 4;
    c.n = 2 + rep % 20;
    c.p_bs_dbm = -10.0 + 50.0 * u(gen);
    const auto ch = trial_channels(c, trial_streams(8, static_cast<std::size_t>(rep), 0));
    const std::size_t k = rep % 4 == 0 ? 0 : static_cast<std::size_t>(gen() % (c.n + 1));
    auto state = fixture::random_state(gen, c.n, k, 100.0 * u(gen));
    const double f = surface::se_upper_bound(state, ch, c.system());
    const double f0 = surface::spectral_efficiency(state, ch, c.system());
    if (f < f0) ++order_fail;
    if (k == 0) {
      ++empty_count;
      worst_empty = std::max(worst_empty, std::abs(f - f0));
      if (std::abs(f - f0) > 1e-10) ++empty_fail;
    }
  }
  report(8, order_fail == 0 && empty_fail == 0,
         fmt("f >= f0 on 1000 states (%zu violations); |f - f0| <= 1e-10 on %zu all-passive "
             "states (worst %.3g)",
             order_fail, empty_count, worst_empty));
}

void criterion9() {
  std::mt19937_64 gen(909);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    power::PowerModelParams p;
    p.tau_bs = 0.1 + 0.9 * u(gen);
    p.tau_a = 0.1 + 0.9 * u(gen);
    p.p_bs_dynamic = 20.0 * u(gen);
    p.p_bs_static = 10.0 * u(gen);
    p.p_a_dynamic = 5.0 * u(gen);
    p.p_a_static = 2.0 * u(gen);
    p.p_passive = 0.01 * u(gen);
    p.p_switch = 0.01 * u(gen);
    const std::size_t n_t = 1 + gen() % 64, n = 1 + gen() % 200;
    const std::size_t k = gen() % (n + 1);
    const double p_bs = 10.0 * u(gen), p_a = 0.1 * u(gen);
    const double closed =
        p_a / p.tau_a + static_cast<double>(k) * (p.p_a_dynamic - p.p_passive) + p.p_a_static;
    const double diff = power::power_fixed(n_t, k, n - k, p_bs, p_a, p).total -
                        power::power_ris(n_t, n, p_bs, p).total;
    const double scale = power::power_fixed(n_t, k, n - k, p_bs, p_a, p).total;
    worst = std::max(worst, std::abs(diff - closed) / scale);
    worst = std::max(worst, std::abs(power::delta_power_fixed(k, p_a, p) - closed) /
                                std::max(std::abs(closed), 1e-300));
  }
  const power::PowerModelParams defaults;
  const double ris = power::power_ris(32, 50, power::dbm_to_watts(30.0), defaults).total;
  const double rel = std::abs(ris - 325.41) / 325.41;
  report(9, worst <= 1e-12 && rel <= 1e-3,
         fmt("delta-P identity worst relative error %.3g (tol 1e-12); P_RIS = %.4f W vs 325.41 W "
             "(%.4f%%)",
             worst, ris, 100 * rel));
}

void criterion10(const SweepResult& fig4, const SweepResult& fig6) {
  bool random_below = true;
  double tightest = 1e300;
  for (double v : fig4.spec.sweep_values) {
    const double gap = mean_se(fig4, "ris_ao", v) - mean_se(fig4, "ris_random", v);
    tightest = std::min(tightest, gap);
    random_below = random_below && gap > 0.0;
  }
  std::vector<double> curve;
  for (double k : fig6.spec.sweep_values) curve.push_back(mean_se(fig6, "fixed_hr:pa=-10", k));
  const auto peak = static_cast<std::size_t>(std::max_element(curve.begin(), curve.end()) - curve.begin());
  const bool rise_fall = peak > 0 && peak + 1 < curve.size() && curve[peak] > curve.front() &&
                         curve[peak] > curve.back();
  report(10, random_below && rise_fall,
         fmt("random-phase RIS below AO-RIS at every P_BS (smallest gap %.4f); fixed HR-RIS "
             "(pa=-10) vs K: %.4f at K=1, peak %.4f at K=%g, %.4f at K=%g",
             tightest, curve.front(), curve[peak], fig6.spec.sweep_values[peak], curve.back(),
             fig6.spec.sweep_values.back()));
}

}  // namespace

int main() {
  std::printf("hrris-sim acceptance (trials per preset: 100)\n");

  // Fig. 3 preset plus the AO-RIS partner for the dominance check.
  auto fig3_spec = preset("fig3");
  fig3_spec.schemes.push_back(SchemeSpec::parse("ris_ao"));
  const auto fig3 = timed_run(fig3_spec, "fig3 + ris_ao");
  const auto fig4 = timed_run(preset("fig4"), "fig4");
  const auto fig6 = timed_run(preset("fig6"), "fig6");

  criterion1(fig3);
  criterion2(fig4);
  criterion3(fig6);

  Dominance d;
  dominance(fig3, d);
  dominance(fig4, d);
  dominance(fig6, d);
  for (const char* name : {"fig5", "fig7", "fig8", "fig9"}) {
    const auto r = timed_run(dominance_subset(preset(name)), (std::string(name) + " ris_ao+dynamic").c_str());
    dominance(r, d);
  }
  report(4, d.violations == 0,
         fmt("dynamic HR-RIS >= AO-RIS on every paired trial of every preset: %zu pairs, %zu "
             "violations, largest deficit %.3g (tol 1e-9)",
             d.pairs, d.violations, d.worst));

  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(fig4, fig6);

  std::sort(g_outcomes.begin(), g_outcomes.end(), [](const Outcome& a, const Outcome& b) { return a.id < b.id; });
  std::size_t failed = 0;
  std::printf("\nsummary\n");
  for (const auto& o : g_outcomes) {
    std::printf("  criterion %2d: %s\n", o.id, o.pass ? "PASS" : "FAIL");
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu of %zu criteria passed\n", g_outcomes.size() - failed, g_outcomes.size());
  return failed == 0 ? 0 : 1;
}
