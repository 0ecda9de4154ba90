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

#include "admitsim/mission.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace admitsim;

namespace {
constexpr double kEps = 0.0035;
constexpr double kTimeout = 10.0;
}  // namespace

TEST_CASE("single waypoint at the current position completes immediately") {
  const std::vector<Waypoint> wps{{Vec3{0.1, 0.2, 0.3}, WaypointEvent::kNone, 0.0, 0.0, 0.0}};
  MissionStatus st;
  const MissionTick t = mission_tick(st, {0.1, 0.2, 0.3}, wps, kEps, 0.0, kTimeout);
  CHECK(t.status.state == MissionState::kCompleted);
}

TEST_CASE("persistent offset above the threshold times out") {
  const std::vector<Waypoint> wps{
      {Vec3{0, 0, 0}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
      {Vec3{0, 0, 0.25}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
  };
  MissionStatus st;
  // Arrive at the first waypoint, advance to the second.
  st = mission_tick(st, {0, 0, 0}, wps, kEps, 0.0, kTimeout).status;
  CHECK(st.current_index == 1);
  // Hover 8.1 mm below it forever.
  const Vec3 stuck{0, 0, 0.25 - 0.0081};
  double t = 0.0;
  while (st.state == MissionState::kMoving && t < 30.0) {
    t += 0.002;
    st = mission_tick(st, stuck, wps, kEps, t, kTimeout).status;
  }
  CHECK(st.state == MissionState::kFailedTimeout);
  CHECK(st.current_index == 1);
  CHECK(t == doctest::Approx(kTimeout).epsilon(0.01));
}

TEST_CASE("tracking every waypoint completes and fires events once") {
  std::vector<Waypoint> wps = default_waypoints();
  MissionStatus st;
  int grasp_events = 0, release_events = 0;
  double t = 0.0;
  int prev_index = -1;
  while (st.state == MissionState::kMoving && t < 60.0) {
    t += 0.002;
    // Teleport to the current target: ideal tracking.
    const MissionTick mt =
        mission_tick(st, current_target(st, wps), wps, kEps, t, kTimeout);
    CHECK(mt.status.current_index >= prev_index);  // monotone progression
    prev_index = mt.status.current_index;
    if (mt.fired == WaypointEvent::kGrasp) {
      ++grasp_events;
      CHECK(mt.fired_mass == doctest::Approx(1.5));
    }
    if (mt.fired == WaypointEvent::kRelease) ++release_events;
    st = mt.status;
  }
  CHECK(st.state == MissionState::kCompleted);
  CHECK(grasp_events == 1);
  CHECK(release_events == 1);
  CHECK(st.arrival_times.size() == wps.size());
}

TEST_CASE("canonical path shape") {
  const double z_table = 0.20;
  const std::vector<Waypoint> wps = default_waypoints(z_table, 1.5, 0.0);
  REQUIRE(wps.size() == 6);
  CHECK(wps[2].event == WaypointEvent::kGrasp);
  CHECK(wps[2].grasp_mass == doctest::Approx(1.5));
  CHECK(wps[5].event == WaypointEvent::kRelease);
  CHECK(wps[2].target.z == doctest::Approx(z_table).epsilon(1e-15));

  // Clearance shifts the grasp height accordingly.
  const std::vector<Waypoint> lifted = default_waypoints(z_table, 1.5, 0.01);
  CHECK(lifted[2].target.z == doctest::Approx(z_table + 0.01).epsilon(1e-15));

  for (const auto& wp : wps) {
    CHECK(wp.target.x >= 0.0);
    CHECK(wp.target.x <= 1.0);
    CHECK(wp.target.y == 0.0);  // path lives in the x-z plane
    CHECK(wp.target.z >= 0.0);
    CHECK(wp.target.z <= 1.0);
  }
}

TEST_CASE("event delay defers the event but not the arrival") {
  std::vector<Waypoint> wps{
      {Vec3{0, 0, 0}, WaypointEvent::kGrasp, 2.0, 1.0, 0.4},
      {Vec3{0, 0, 0.1}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
  };
  MissionStatus st;
  double t = 0.0;
  bool fired = false;
  double fired_at = -1.0;
  while (st.state == MissionState::kMoving && t < 5.0 && st.current_index == 0) {
    const MissionTick mt = mission_tick(st, {0, 0, 0}, wps, kEps, t, kTimeout);
    if (mt.fired == WaypointEvent::kGrasp) {
      fired = true;
      fired_at = t;
    }
    st = mt.status;
    t += 0.002;
  }
  CHECK(fired);
  CHECK(fired_at == doctest::Approx(0.4).epsilon(0.02));
  CHECK(st.arrival_times.front() == doctest::Approx(0.0));
  // Advance happened only after the full dwell.
  CHECK(t >= 1.0);
}

TEST_CASE("never advances past an unreachable waypoint") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.002, 0.002);
  const std::vector<Waypoint> wps{
      {Vec3{0, 0, 0}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
      {Vec3{0, 0, 0.25}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
      {Vec3{0, 0, 0.50}, WaypointEvent::kNone, 0.0, 0.0, 0.0},
  };
  MissionStatus st;
  st = mission_tick(st, {0, 0, 0}, wps, kEps, 0.0, kTimeout).status;
  double t = 0.0;
  while (st.state == MissionState::kMoving && t < 30.0) {
    t += 0.002;
    // Random jitter around a point 8 mm short of the target: the distance
    // never dips below eps.
    const Vec3 p{u(rng), u(rng), 0.25 - 0.008 + u(rng)};
    st = mission_tick(st, p, wps, kEps, t, kTimeout).status;
    CHECK(st.current_index == 1);
  }
  CHECK(st.state == MissionState::kFailedTimeout);
}

TEST_CASE("argument validation") {
  MissionStatus st;
  CHECK_THROWS_AS(mission_tick(st, {}, {}, kEps, 0.0, kTimeout), std::invalid_argument);
  const std::vector<Waypoint> wps{{Vec3{}, WaypointEvent::kNone, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(mission_tick(st, {}, wps, 0.0, 0.0, kTimeout), std::invalid_argument);
}
