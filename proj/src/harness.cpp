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

#include "admitsim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace admitsim {

SimResult run_scenario(const Scenario& s) {
  s.validate();
  const double dt = s.dt;

  PlantState plant;
  plant.p = s.waypoints.front().target;
  AdmittanceState adm{plant.p, Vec3{}};
  MovingAverage<Vec3> ft_filter(s.ft_filter_window);
  MovingAverage<Vec3> accel_filter(s.accel_filter_window);
  MassEstimator estimator(s.estimator);
  MissionStatus mission;

  SimResult out;
  const auto max_ticks = static_cast<std::uint64_t>(s.duration_max / dt);
  out.trace.reserve(std::min<std::uint64_t>(max_ticks, 1u << 22));
  long settle_ticks_left = -1;

  for (std::uint64_t tick = 0; tick < max_ticks; ++tick) {
    const double t = static_cast<double>(tick) * dt;

    // Sense the current state, then move the pipeline to the base frame.
    const FtReading ft = read_ft(plant, s.table, s.bias, s.sensor_mount, s.noise, tick, t);
    const AccelReading acc = read_accel(plant, s.sensor_mount, s.noise, tick, t);
    const Vec3 f_comp = compensate(to_base_frame(s.sensor_mount, ft.force), s.bias);
    const Vec3 f_filt = ft_filter.step(f_comp);
    const Vec3 a_filt = accel_filter.step(to_base_frame(s.sensor_mount, acc.accel));

    // The estimator works on the supporting force, the negation of the
    // measured load.
    const auto [f_z, accel_z_grav] = vertical_projections(-f_filt, a_filt, s.bias.gravity);
    estimator.step(f_z, accel_z_grav, /*m_g=*/0.0);

    // Mission progression on the executed position; grasp/release events
    // reconfigure the plant and restart the estimator.
    const MissionTick mt =
        mission_tick(mission, plant.p, s.waypoints, s.eps, t, s.waypoint_timeout);
    mission = mt.status;
    if (mt.fired == WaypointEvent::kGrasp) {
      plant = set_gripper(plant, true, mt.fired_mass);
      estimator.reset();
      estimator.enable();
      if (out.report.grasp_tick < 0) out.report.grasp_tick = static_cast<int>(tick);
    } else if (mt.fired == WaypointEvent::kRelease) {
      plant = set_gripper(plant, false, 0.0);
      estimator.reset();
    }
    const Vec3& p_0 = current_target(mission, s.waypoints);

    const ExcitationForce f_exc =
        s.compensation_enabled
            ? excitation_from_estimate(estimator.last().m_u_applied, accel_z_grav)
            : ExcitationForce{};

    const Vec3 accel_adm = admittance_accel(s.admittance, adm, p_0, f_filt, f_exc);
    adm = integrate_step(adm, accel_adm, dt);
    const Vec3 v_cmd = adm.v_a;

    TraceRecord rec;
    rec.t = t;
    rec.p_true = plant.p;
    rec.p_a = adm.p_a;
    rec.p_0 = p_0;
    rec.v_cmd = v_cmd;
    rec.f_ext_filtered = f_filt;
    rec.f_exc_z = f_exc.z;
    rec.m_u_hat = estimator.last().m_u_hat;
    rec.m_u_applied = estimator.last().m_u_applied;
    rec.wp_index = mission.current_index;
    out.trace.push_back(rec);

    plant = plant_step(plant, v_cmd, s.table, s.inner, dt);

    if (mission.state == MissionState::kFailedTimeout) break;
    if (mission.state == MissionState::kCompleted) {
      if (settle_ticks_left < 0) {
        settle_ticks_left = static_cast<long>(s.settle_after_complete / dt);
      }
      if (settle_ticks_left-- <= 0) break;
    }
  }

  RunReport& rep = out.report;
  rep.completed = mission.state == MissionState::kCompleted;
  rep.outcome = rep.completed ? "completed"
              : (mission.state == MissionState::kFailedTimeout ? "failed_timeout"
                                                               : "duration_exceeded");
  rep.waypoint_times = mission.arrival_times;

  // Post-grasp hold metrics.
  int grasp_wp = -1;
  for (size_t i = 0; i < s.waypoints.size(); ++i) {
    if (s.waypoints[i].event == WaypointEvent::kGrasp) {
      grasp_wp = static_cast<int>(i);
      break;
    }
  }
  const int hold_wp = grasp_wp >= 0 ? grasp_wp + 1 : -1;
  if (hold_wp >= 0 && hold_wp < static_cast<int>(s.waypoints.size())) {
    rep.sag_mm = mean_sag_mm_over(out.trace, hold_wp, 0.5, dt);
    // Estimate statistics over the same settled stretch of the hold.
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(out.trace.size()); ++i) {
      if (out.trace[static_cast<size_t>(i)].wp_index == hold_wp) {
        if (lo < 0) lo = i;
        hi = i;
      }
    }
    if (lo >= 0) {
      const int start = std::max(lo, hi - static_cast<int>(0.5 / dt));
      double sum = 0.0, sum2 = 0.0;
      int n = 0;
      for (int i = start; i <= hi; ++i, ++n) {
        const double g = out.trace[static_cast<size_t>(i)].m_u_hat * 1000.0;
        sum += g;
        sum2 += g * g;
      }
      if (n > 0) {
        rep.estimate_mean_g = sum / n;
        rep.estimate_std_g = std::sqrt(std::max(0.0, sum2 / n - rep.estimate_mean_g * rep.estimate_mean_g));
      }
    }
  } else if (!out.trace.empty()) {
    // No post-grasp waypoint (hold-style scenario): use the final second.
    const int hi = static_cast<int>(out.trace.size()) - 1;
    const int start = std::max(0, hi - static_cast<int>(1.0 / dt));
    double sum = 0.0, sum2 = 0.0;
    int n = 0;
    for (int i = start; i <= hi; ++i, ++n) {
      const double g = out.trace[static_cast<size_t>(i)].m_u_hat * 1000.0;
      sum += g;
      sum2 += g * g;
    }
    rep.estimate_mean_g = sum / n;
    rep.estimate_std_g = std::sqrt(std::max(0.0, sum2 / n - rep.estimate_mean_g * rep.estimate_mean_g));
  }

  if (rep.grasp_tick >= 0 &&
      rep.grasp_tick + 500 <= static_cast<int>(out.trace.size())) {
    rep.rmse_mm = rmse_z(out.trace, rep.grasp_tick, 500);
  }
  return out;
}

double predicted_sag(double m_u, double g_mag, double k_zz) {
  if (!(k_zz > 0.0)) throw std::invalid_argument("predicted_sag: k_zz must be > 0");
  return m_u * g_mag / k_zz;
}

double rmse_z(const std::vector<TraceRecord>& trace, int window_start_tick, int window_len) {
  if (window_len <= 0 || window_start_tick < 0 ||
      window_start_tick + window_len > static_cast<int>(trace.size())) {
    throw std::invalid_argument("rmse_z: window outside trace bounds");
  }
  double acc = 0.0;
  for (int i = window_start_tick; i < window_start_tick + window_len; ++i) {
    const auto& r = trace[static_cast<size_t>(i)];
    const double e = r.p_a.z - r.p_0.z;
    acc += e * e;
  }
  return std::sqrt(acc / window_len) * 1000.0;
}

int first_grasp_tick(const std::vector<TraceRecord>& trace) {
  for (size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].m_u_applied != 0.0 || trace[i].m_u_hat != 0.0) return static_cast<int>(i);
  }
  return -1;
}

double mean_sag_mm_over(const std::vector<TraceRecord>& trace, int wp_index, double window_s,
                        double dt) {
  int lo = -1, hi = -1;
  for (int i = 0; i < static_cast<int>(trace.size()); ++i) {
    if (trace[static_cast<size_t>(i)].wp_index == wp_index) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  if (lo < 0) return 0.0;
  const int start = std::max(lo, hi - static_cast<int>(window_s / dt));
  double acc = 0.0;
  int n = 0;
  for (int i = start; i <= hi; ++i, ++n) {
    const auto& r = trace[static_cast<size_t>(i)];
    acc += r.p_0.z - r.p_true.z;
  }
  return n > 0 ? std::max(0.0, acc / n * 1000.0) : 0.0;
}

SuiteReport run_experiment_suite() {
  std::vector<Scenario> scenarios;
  for (int id = 1; id <= 4; ++id) scenarios.push_back(experiment_preset(id));
  return run_experiment_suite(scenarios);
}

SuiteReport run_experiment_suite(const std::vector<Scenario>& scenarios) {
  if (scenarios.size() != 4) {
    throw std::invalid_argument("run_experiment_suite: expected four scenarios");
  }
  SuiteReport suite;
  auto check = [&suite](bool ok, const std::string& msg) {
    suite.check_messages.push_back((ok ? "[ok] " : "[FAIL] ") + msg);
    if (!ok) suite.checks_passed = false;
  };
  suite.checks_passed = true;

  for (int id = 1; id <= 4; ++id) {
    const Scenario& s = scenarios[static_cast<size_t>(id - 1)];
    ExperimentResult row;
    row.exp_id = id;
    row.k_a = s.admittance.k_a;
    row.compensation = s.compensation_enabled;
    try {
      const SimResult res = run_scenario(s);
      row.completed = res.report.completed;
      row.sag_sim_mm = res.report.sag_mm;
      row.sag_eq_mm = s.compensation_enabled
                          ? 0.0
                          : predicted_sag(s.payload_mass, s.bias.gravity.norm(),
                                          s.admittance.k_a) * 1000.0;
      row.rmse_mm = res.report.rmse_mm;
      row.estimate_mean_g = res.report.estimate_mean_g;
      if (id == 2) {
        row.note = "analytic sag exceeds the arrival threshold; the reference hardware "
                   "run reported success at 3.5 mm (model-vs-hardware discrepancy)";
      }
    } catch (const std::exception& e) {
      row.note = std::string("config-error: ") + e.what();
      check(false, "exp" + std::to_string(id) + " could not run: " + e.what());
    }
    suite.rows.push_back(row);
  }

  const auto& r1 = suite.rows[0];
  const auto& r2 = suite.rows[1];
  const auto& r3 = suite.rows[2];
  const auto& r4 = suite.rows[3];

  for (const auto* r : {&r1, &r2, &r4}) {
    const double rel = std::abs(r->sag_sim_mm - r->sag_eq_mm) / r->sag_eq_mm;
    check(rel <= 0.02, "exp" + std::to_string(r->exp_id) + " sag within 2% of m*g/k (sim " +
                           std::to_string(r->sag_sim_mm) + " mm, analytic " +
                           std::to_string(r->sag_eq_mm) + " mm)");
  }
  check(!r1.completed, "exp1 fails at the post-grasp waypoint");
  check(r3.completed, "exp3 completes");
  check(r3.sag_sim_mm < 3.5, "exp3 sag below 3.5 mm");
  check(!r4.completed, "exp4 fails at the post-grasp waypoint");
  check(r3.rmse_mm < r2.rmse_mm && r2.rmse_mm < r1.rmse_mm && r1.rmse_mm < r4.rmse_mm,
        "rmse ordering exp3 < exp2 < exp1 < exp4");
  check(r3.rmse_mm < 2.5, "exp3 rmse below 2.5 mm");
  check(r4.rmse_mm > 15.0, "exp4 rmse above 15 mm");
  return suite;
}

}  // namespace admitsim
