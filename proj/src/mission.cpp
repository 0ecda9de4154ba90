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

#include <algorithm>
#include <stdexcept>

namespace admitsim {

MissionTick mission_tick(const MissionStatus& status, const Vec3& p_measured,
                         const std::vector<Waypoint>& waypoints, double eps, double t,
                         double timeout) {
  if (waypoints.empty()) throw std::invalid_argument("mission_tick: waypoints empty");
  if (!(eps > 0.0)) throw std::invalid_argument("mission_tick: eps must be > 0");

  MissionTick out;
  out.status = status;
  MissionStatus& s = out.status;

  if (s.state != MissionState::kMoving) return out;

  const auto& wp = waypoints[static_cast<size_t>(s.current_index)];

  if (s.dwelling) {
    if (s.event_pending && t >= s.event_at_t) {
      s.event_pending = false;
      out.fired = wp.event;
      out.fired_mass = wp.grasp_mass;
    }
    if (t >= s.dwell_until && !s.event_pending) {
      s.dwelling = false;
      s.last_progress_t = t;
      if (s.current_index + 1 < static_cast<int>(waypoints.size())) {
        ++s.current_index;
      } else {
        s.state = MissionState::kCompleted;
      }
    }
    return out;
  }

  if ((p_measured - wp.target).norm() < eps) {
    s.arrival_times.push_back(t);
    s.last_progress_t = t;
    const double hold = std::max(wp.dwell_s, wp.event_delay_s);
    if (wp.event != WaypointEvent::kNone && wp.event_delay_s > 0.0) {
      s.event_pending = true;
      s.event_at_t = t + wp.event_delay_s;
    } else {
      out.fired = wp.event;
      out.fired_mass = wp.grasp_mass;
    }
    if (hold > 0.0) {
      s.dwelling = true;
      s.dwell_until = t + hold;
    } else if (s.current_index + 1 < static_cast<int>(waypoints.size())) {
      ++s.current_index;
    } else {
      s.state = MissionState::kCompleted;
    }
    return out;
  }

  if (timeout > 0.0 && t - s.last_progress_t > timeout) {
    s.state = MissionState::kFailedTimeout;
  }
  return out;
}

std::vector<Waypoint> default_waypoints(double z_table, double payload_mass,
                                        double tool_clearance) {
  const double z_grasp = z_table + tool_clearance;
  std::vector<Waypoint> wps(6);
  wps[0] = {Vec3{0.30, 0.0, 0.50}, WaypointEvent::kNone, 0.0, 0.0, 0.0};     // home
  wps[1] = {Vec3{0.45, 0.0, 0.35}, WaypointEvent::kNone, 0.0, 1.5, 0.0};     // above bin
  // Grasp only after the arrival transient has rung out (the soft settings
  // need ~1 s): the gripper closes 1.2 s after arrival, and the arm holds
  // while the load transfer settles before sliding out.
  wps[2] = {Vec3{0.45, 0.0, z_grasp}, WaypointEvent::kGrasp, payload_mass, 1.45, 1.2};
  // Slide past the bin edge at grasp height; long hold for sag metrics.
  wps[3] = {Vec3{0.60, 0.0, z_grasp}, WaypointEvent::kNone, 0.0, 2.0, 0.0};
  wps[4] = {Vec3{0.70, 0.0, 0.45}, WaypointEvent::kNone, 0.0, 0.0, 0.0};     // shelf approach
  wps[5] = {Vec3{0.75, 0.0, 0.40}, WaypointEvent::kRelease, 0.0, 0.3, 0.1};  // shelf place
  return wps;
}

const Vec3& current_target(const MissionStatus& status, const std::vector<Waypoint>& waypoints) {
  if (waypoints.empty()) throw std::invalid_argument("current_target: waypoints empty");
  const int i = std::min(status.current_index, static_cast<int>(waypoints.size()) - 1);
  return waypoints[static_cast<size_t>(i)].target;
}

}  // namespace admitsim
