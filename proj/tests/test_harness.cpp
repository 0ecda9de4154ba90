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

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace admitsim;

TEST_CASE("static sag prediction") {
  CHECK(predicted_sag(1.5, 9.81, 1800.0) == doctest::Approx(0.0081750).epsilon(1e-12));
  CHECK(predicted_sag(1.5, 9.81, 300.0) == doctest::Approx(0.049050).epsilon(1e-12));
  CHECK(predicted_sag(0.0, 9.81, 500.0) == 0.0);
  CHECK_THROWS_AS(predicted_sag(1.5, 9.81, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(predicted_sag(1.5, 9.81, -10.0), std::invalid_argument);
}

TEST_CASE("vertical rmse over a window") {
  std::vector<TraceRecord> trace(100);
  SUBCASE("constant offset") {
    for (auto& r : trace) {
      r.p_a.z = 0.102;  // 2 mm above the reference
      r.p_0.z = 0.100;
    }
    CHECK(rmse_z(trace, 0, 100) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("alternating sign, constant magnitude") {
    for (size_t i = 0; i < trace.size(); ++i) {
      trace[i].p_a.z = (i % 2 == 0) ? 0.003 : -0.003;
      trace[i].p_0.z = 0.0;
    }
    CHECK(rmse_z(trace, 0, 100) == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("window bounds are enforced") {
    CHECK_THROWS_AS(rmse_z(trace, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(rmse_z(trace, 90, 20), std::invalid_argument);
    CHECK_THROWS_AS(rmse_z(trace, -1, 10), std::invalid_argument);
  }
}

TEST_CASE("zero payload completes with no sag at any stiffness") {
  for (double k : {300.0, 1800.0, 2500.0}) {
    Scenario s = zero_payload_preset(k);
    const SimResult res = run_scenario(s);
    CHECK(res.report.completed);
    CHECK(res.report.sag_mm < 0.1);
  }
}

TEST_CASE("steady sag matches the static law within half a percent") {
  for (double k : {300.0, 1800.0, 2500.0}) {
    Scenario s = experiment_preset(4);  // uncompensated path
    s.admittance = AdmittanceParams::critically_damped(4.0, k);
    const SimResult res = run_scenario(s);
    const double want_mm = predicted_sag(1.5, 9.81, k) * 1000.0;
    CHECK(res.report.sag_mm == doctest::Approx(want_mm).epsilon(0.005));
  }
}

TEST_CASE("compensation reduces steady sag by more than an order of magnitude") {
  const SimResult with = run_scenario(experiment_preset(3));
  const SimResult without = run_scenario(experiment_preset(4));
  CHECK(without.report.sag_mm >= 10.0 * std::max(with.report.sag_mm, 1e-6));
}

TEST_CASE("rmse before the grasp is negligible") {
  const SimResult res = run_scenario(experiment_preset(3));
  // Final 0.5 s of the pre-grasp hover above the bin (waypoint index 1).
  int lo = -1, hi = -1;
  for (int i = 0; i < static_cast<int>(res.trace.size()); ++i) {
    if (res.trace[static_cast<size_t>(i)].wp_index == 1) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  REQUIRE(lo >= 0);
  const int len = 250;
  REQUIRE(hi - len >= lo);
  CHECK(rmse_z(res.trace, hi - len, len) < 0.1);
}

TEST_CASE("reports carry waypoint arrival times and the grasp tick") {
  const SimResult res = run_scenario(experiment_preset(3));
  CHECK(res.report.completed);
  CHECK(res.report.outcome == "completed");
  CHECK(res.report.waypoint_times.size() == 6);
  CHECK(res.report.grasp_tick > 0);
  // Arrival times strictly increase.
  for (size_t i = 1; i < res.report.waypoint_times.size(); ++i) {
    CHECK(res.report.waypoint_times[i] > res.report.waypoint_times[i - 1]);
  }
  // Trace time is strictly increasing with one record per tick.
  for (size_t i = 1; i < res.trace.size(); ++i) {
    CHECK(res.trace[i].t > res.trace[i - 1].t);
  }
}

TEST_CASE("identical scenarios produce identical traces") {
  Scenario s = noisy_hold_preset();  // noise exercises the seeded path
  const SimResult a = run_scenario(s);
  const SimResult b = run_scenario(s);
  REQUIRE(a.trace.size() == b.trace.size());
  for (size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].p_true.z == b.trace[i].p_true.z);
    CHECK(a.trace[i].m_u_hat == b.trace[i].m_u_hat);
    CHECK(a.trace[i].f_ext_filtered.x == b.trace[i].f_ext_filtered.x);
  }
}

TEST_CASE("invalid scenarios are rejected with a field path") {
  Scenario s = experiment_preset(1);
  s.dt = 0.05;
  CHECK_THROWS_WITH_AS(run_scenario(s), doctest::Contains("dt"), std::invalid_argument);
  s = experiment_preset(1);
  s.waypoints.clear();
  CHECK_THROWS_AS(run_scenario(s), std::invalid_argument);
  s = experiment_preset(1);
  s.waypoints[5].event = WaypointEvent::kGrasp;  // second grasp while holding
  CHECK_THROWS_WITH_AS(run_scenario(s), doctest::Contains("waypoints[5]"),
                       std::invalid_argument);
}

TEST_CASE("exact compensation pins the virtual pose to the reference") {
  const SimResult res = run_scenario(experiment_preset(3));
  // Last tick targeting the post-grasp hold waypoint: the estimate has
  // converged exactly, so the virtual pose sits on the reference.
  int last_hold = -1;
  for (int i = 0; i < static_cast<int>(res.trace.size()); ++i) {
    if (res.trace[static_cast<size_t>(i)].wp_index == 3) last_hold = i;
  }
  REQUIRE(last_hold >= 0);
  const auto& r = res.trace[static_cast<size_t>(last_hold)];
  CHECK(std::abs(r.p_a.z - r.p_0.z) < 1e-6);
}

TEST_CASE("a scenario that cannot run is reported as a config-error row") {
  std::vector<Scenario> scenarios;
  for (int id = 1; id <= 4; ++id) scenarios.push_back(experiment_preset(id));
  scenarios[0].admittance.k_a = 0.0;  // static-sag prediction is undefined
  const SuiteReport suite = run_experiment_suite(scenarios);
  REQUIRE(suite.rows.size() == 4);
  CHECK(suite.rows[0].note.find("config-error") != std::string::npos);
  CHECK_FALSE(suite.checks_passed);
  // The other rows still ran.
  CHECK(suite.rows[2].completed);
}

TEST_CASE("experiment suite verdicts and orderings") {
  const SuiteReport suite = run_experiment_suite();
  REQUIRE(suite.rows.size() == 4);
  CHECK(suite.checks_passed);
  CHECK_FALSE(suite.rows[0].completed);
  CHECK(suite.rows[2].completed);
  CHECK_FALSE(suite.rows[3].completed);
  CHECK_FALSE(suite.rows[1].note.empty());  // the flagged discrepancy
  CHECK(suite.rows[2].rmse_mm < suite.rows[1].rmse_mm);
  CHECK(suite.rows[1].rmse_mm < suite.rows[0].rmse_mm);
  CHECK(suite.rows[0].rmse_mm < suite.rows[3].rmse_mm);
}
