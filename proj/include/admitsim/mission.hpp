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

#ifndef ADMITSIM_MISSION_HPP_
#define ADMITSIM_MISSION_HPP_

#include <vector>

#include "admitsim/geometry.hpp"

namespace admitsim {

enum class WaypointEvent { kNone, kGrasp, kRelease };

struct Waypoint {
  Vec3 target{};                // m, base frame
  WaypointEvent event = WaypointEvent::kNone;
  double grasp_mass = 0.0;      // kg, used when event == kGrasp
  double dwell_s = 0.0;         // hold time at the waypoint after arrival
  // Gripper actuation lag: the event fires this long after arrival, once
  // the arm has settled, instead of while still closing on the target.
  double event_delay_s = 0.0;
};

enum class MissionState { kMoving, kCompleted, kFailedTimeout };

/// Waypoint progression state. The index advances only once the measured
/// position is within eps of the current target (and any dwell elapsed);
/// an event fires at arrival, i.e. at the start of the dwell.
struct MissionStatus {
  int current_index = 0;
  MissionState state = MissionState::kMoving;
  bool dwelling = false;
  double dwell_until = 0.0;
  bool event_pending = false;
  double event_at_t = 0.0;
  double last_progress_t = 0.0;
  std::vector<double> arrival_times;
};

/// Outcome of one mission tick. `fired` is the event of the waypoint
/// arrived at this tick (kNone otherwise); the caller applies it to the
/// plant/estimator.
struct MissionTick {
  MissionStatus status;
  WaypointEvent fired = WaypointEvent::kNone;
  double fired_mass = 0.0;
};

MissionTick mission_tick(const MissionStatus& status, const Vec3& p_measured,
                         const std::vector<Waypoint>& waypoints, double eps, double t,
                         double timeout);

/// Canonical six-waypoint bin-to-shelf path in the X-Z plane: home, above
/// bin, bin (grasp), clearance slide past the bin edge, shelf approach,
/// shelf place (release). The grasp point sits on the bin surface so the
/// payload is picked up in contact.
std::vector<Waypoint> default_waypoints(double z_table = 0.20, double payload_mass = 1.5,
                                        double tool_clearance = 0.0);

/// Reference target for the controller given mission progress.
const Vec3& current_target(const MissionStatus& status, const std::vector<Waypoint>& waypoints);

}  // namespace admitsim

#endif  // ADMITSIM_MISSION_HPP_
