// Copyright 2026 The admitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run single scenarios, the four-experiment
// comparison suite, and closed-loop stability sweeps.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "admitsim/harness.hpp"
#include "admitsim/scenario_json.hpp"
#include "admitsim/stability.hpp"
#include "admitsim/svg_plot.hpp"
#include "admitsim/trace_io.hpp"

namespace fs = std::filesystem;
using namespace admitsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitMissionFailed = 2;

std::string default_out_dir() {
  const char* env = std::getenv("ADMITSIM_OUT_DIR");
  return env ? env : "out";
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output dir: " + dir + ": " + ec.message());
}

void write_plots(const std::string& dir, const Scenario& s,
                 const std::vector<TraceRecord>& trace) {
  try {
    SvgSeries actual{"actual z", "#1f77b4", false, {}};
    SvgSeries ideal{"ideal admittance z", "#d62728", true, {}};
    SvgSeries ref{"reference z", "#2ca02c", true, {}};
    SvgSeries est{"estimated mass [g]", "#1f77b4", false, {}};
    SvgSeries applied{"applied mass [g]", "#ff7f0e", false, {}};
    SvgSeries truth{"true payload [g]", "#2ca02c", true, {}};
    for (const auto& r : trace) {
      actual.points.emplace_back(r.t, r.p_true.z);
      ideal.points.emplace_back(r.t, r.p_a.z);
      ref.points.emplace_back(r.t, r.p_0.z);
      est.points.emplace_back(r.t, r.m_u_hat * 1000.0);
      applied.points.emplace_back(r.t, r.m_u_applied * 1000.0);
      truth.points.emplace_back(r.t, s.payload_mass * 1000.0);
    }
    write_svg_plot(dir + "/z_trajectory.svg", s.name + ": vertical trajectory", "t [s]",
                   "z [m]", {actual, ideal, ref});
    write_svg_plot(dir + "/mass_estimate.svg", s.name + ": payload mass estimate", "t [s]",
                   "mass [g]", {est, applied, truth});
  } catch (const std::exception& e) {
    // Plotting trouble must not change the simulation outcome.
    std::cerr << "warning: plot generation failed: " << e.what() << "\n";
  }
}

int cmd_run(const std::string& scenario_path, const std::string& preset,
            const std::string& out_dir, std::optional<std::uint64_t> seed, bool plot) {
  Scenario s;
  try {
    if (!preset.empty()) {
      if (preset == "exp1" || preset == "exp2" || preset == "exp3" || preset == "exp4") {
        s = experiment_preset(preset[3] - '0');
      } else if (preset == "contact_grasp") {
        s = contact_grasp_preset();
      } else if (preset == "noisy_hold") {
        s = noisy_hold_preset();
      } else {
        std::cerr << "error: unknown preset '" << preset
                  << "' (exp1..exp4, contact_grasp, noisy_hold)\n";
        return kExitConfigError;
      }
    } else {
      s = load_scenario(scenario_path);
    }
    if (seed) s.noise.seed = *seed;
    ensure_dir(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const SimResult res = run_scenario(s);
  write_trace_csv(out_dir + "/trace.csv", res.trace);
  write_report_csv(out_dir + "/report.csv", res.report);
  if (plot) write_plots(out_dir, s, res.trace);

  std::cout << s.name << ": " << res.report.outcome << ", sag " << res.report.sag_mm
            << " mm, rmse " << res.report.rmse_mm << " mm, estimate "
            << res.report.estimate_mean_g << " g\n";
  return res.report.completed ? kExitOk : kExitMissionFailed;
}

int cmd_suite(const std::string& out_dir, bool plot) {
  try {
    ensure_dir(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  const SuiteReport suite = run_experiment_suite();
  write_suite_csv(out_dir + "/suite_report.csv", suite);
  std::cout << format_suite_table(suite);
  if (plot) {
    for (int id = 1; id <= 4; ++id) {
      const Scenario s = experiment_preset(id);
      const SimResult res = run_scenario(s);
      const std::string dir = out_dir + "/" + s.name;
      ensure_dir(dir);
      write_plots(dir, s, res.trace);
    }
  }
  return suite.checks_passed ? kExitOk : kExitConfigError;
}

int cmd_stability(const std::string& sweep_path, const std::string& out_dir) {
  StabilitySweep sweep;
  try {
    if (!sweep_path.empty()) sweep = load_sweep(sweep_path);
    ensure_dir(out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::ofstream out(out_dir + "/stability_map.csv", std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write stability_map.csv\n";
    return kExitConfigError;
  }
  out << "k_a,tau_v,T_f,m_u_hat_gain,max_real_part,stable,method_agreement,degenerate\n";
  char buf[160];
  for (double k : sweep.k_a) {
    for (double tau : sweep.tau_v) {
      for (double tf : sweep.t_f) {
        for (double gain : sweep.m_u_hat_gain) {
          const AdmittanceParams params =
              AdmittanceParams::critically_damped(sweep.admittance_mass, k);
          const RationalTransfer m_hat =
              RationalTransfer::first_order_lag(gain * sweep.payload_mass, tf);
          const RationalTransfer r = RationalTransfer::first_order_lag(1.0, tau);
          const Poly poly =
              characteristic_polynomial(params, sweep.payload_mass, m_hat, r);
          const StabilityVerdict v = assess(poly);
          bool agreement = true;
          if (!v.degenerate) {
            agreement = routh_hurwitz(poly) == v.stable;
          }
          std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g,%.10g,%d,%d,%d\n", k, tau,
                        tf, gain, v.max_real_part, v.stable ? 1 : 0, agreement ? 1 : 0,
                        v.degenerate ? 1 : 0);
          out << buf;
        }
      }
    }
  }
  std::cout << "stability map written to " << out_dir << "/stability_map.csv\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mass-adaptive admittance control simulator"};
  app.require_subcommand(1);

  std::string scenario_path, preset, out_dir = default_out_dir();
  std::uint64_t seed_value = 0;
  bool plot = false;

  auto* run = app.add_subcommand("run", "Run one scenario and write trace/report CSVs");
  auto* run_scn = run->add_option("--scenario", scenario_path, "Scenario JSON file");
  run->add_option("--preset", preset, "Built-in scenario (exp1..exp4, contact_grasp, noisy_hold)")
      ->excludes(run_scn);
  run->add_option("--out", out_dir, "Output directory");
  auto* seed_opt = run->add_option("--seed", seed_value, "Override the noise seed");
  run->add_flag("--plot", plot, "Also write z_trajectory.svg and mass_estimate.svg");

  std::string suite_out = default_out_dir();
  bool suite_plot = false;
  auto* suite = app.add_subcommand("suite", "Run experiments 1-4 and write the comparison");
  suite->add_option("--out", suite_out, "Output directory");
  suite->add_flag("--plot", suite_plot, "Also write per-experiment plots");

  std::string sweep_path, stab_out = default_out_dir();
  auto* stab = app.add_subcommand("stability", "Sweep the closed-loop characteristic polynomial");
  stab->add_option("--scenario", sweep_path, "Sweep grid JSON file (default grid if omitted)");
  stab->add_option("--out", stab_out, "Output directory");

  auto* wpd = app.add_subcommand("waypoints-dump", "Print the canonical six-waypoint path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (scenario_path.empty() && preset.empty()) {
        std::cerr << "error: run needs --scenario or --preset\n";
        return kExitConfigError;
      }
      return cmd_run(scenario_path, preset, out_dir,
                     seed_opt->count() ? std::optional<std::uint64_t>(seed_value)
                                       : std::nullopt,
                     plot);
    }
    if (suite->parsed()) return cmd_suite(suite_out, suite_plot);
    if (stab->parsed()) return cmd_stability(sweep_path, stab_out);
    if (wpd->parsed()) {
      std::cout << waypoints_to_json(default_waypoints());
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
