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

#ifndef ADMITSIM_SCENARIO_HPP_
#define ADMITSIM_SCENARIO_HPP_

#include <string>
#include <vector>

#include "admitsim/controller.hpp"
#include "admitsim/estimator.hpp"
#include "admitsim/mission.hpp"
#include "admitsim/plant.hpp"
#include "admitsim/signal.hpp"

namespace admitsim {

/// Full configuration of one closed-loop run.
struct Scenario {
  std::string name = "scenario";

  AdmittanceParams admittance = AdmittanceParams::critically_damped(4.0, 300.0);
  bool compensation_enabled = true;
  double payload_mass = 1.5;  // kg; default mass for grasp waypoints

  NoiseModel noise{};          // canonical presets run noiseless
  BiasModel bias{};
  InnerLoopModel inner{};
  TableContact table{};
  EstimatorConfig estimator{};
  AxisAngle sensor_mount = AxisAngle::identity();

  int ft_filter_window = 50;
  int accel_filter_window = 50;

  std::vector<Waypoint> waypoints = default_waypoints();
  double eps = 0.0035;            // m, waypoint arrival threshold
  double waypoint_timeout = 10.0; // s per-waypoint stall limit
  double dt = 0.002;              // s
  double duration_max = 60.0;     // s
  double settle_after_complete = 1.0;  // s of extra trace after completion

  /// Throws std::invalid_argument with a field path on the first bad field.
  void validate() const;
};

/// Canonical experiment presets: stiffness level and compensation switch,
/// 1.5 kg payload through the six-waypoint path, noiseless.
///   1: k=1800, comp off   2: k=2500, comp off
///   3: k=300,  comp on    4: k=300,  comp off
Scenario experiment_preset(int exp_id);

/// Grasp fired while the tool is pressed into the table; exercises the
/// reaction-force transient (negative mass estimate, clamped to zero).
Scenario contact_grasp_preset();

/// Stationary hold with a grasped payload under 4 N force noise; used for
/// estimate convergence and scatter checks.
Scenario noisy_hold_preset();

/// Canonical path with no payload mass.
Scenario zero_payload_preset(double k_a);

}  // namespace admitsim

#endif  // ADMITSIM_SCENARIO_HPP_
