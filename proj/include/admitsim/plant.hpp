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

#ifndef ADMITSIM_PLANT_HPP_
#define ADMITSIM_PLANT_HPP_

#include <cstdint>

#include "admitsim/geometry.hpp"
#include "admitsim/signal.hpp"

namespace admitsim {

/// True state of the simulated end-effector point.
struct PlantState {
  Vec3 p{};   // m, base frame
  Vec3 v{};   // m/s
  Vec3 a{};   // m/s^2, over the last step
  bool payload_attached = false;
  double m_u_true = 0.0;  // kg
};

/// The robot's built-in velocity tracking, modeled as a first-order lag.
/// The arm is a velocity source: contact loads show up in the wrist
/// sensor, not in the executed motion.
struct InnerLoopModel {
  double tau_v = 0.05;  // s

  void validate() const;
};

/// Penalty spring-damper table surface spanning x in [x_min, x_max].
/// Unilateral: it only ever pushes up.
struct TableContact {
  double z_table = 0.20;       // m
  double k_contact = 1.0e5;    // N/m
  double d_contact = 1.0e3;    // N*s/m
  double x_min = -1.0e30;      // m; support extent (bin platform edge)
  double x_max = 1.0e30;       // m

  void validate() const;
};

struct FtReading {
  double t = 0.0;
  Vec3 force{};  // N, sensor frame
};

struct AccelReading {
  double t = 0.0;
  Vec3 accel{};  // m/s^2, sensor frame
};

/// Upward contact force for the current state; zero when not penetrating.
double contact_force(const PlantState& state, const TableContact& world);

/// Advances the end-effector one step under the inner velocity loop:
///   v' = v + (dt/tau_v)*(v_cmd - v),  p' = p + v'*dt,  a = (v' - v)/dt.
PlantState plant_step(const PlantState& state, const Vec3& v_cmd, const TableContact& world,
                      const InnerLoopModel& inner, double dt);

/// Wrist force-torque reading (force channels), sensor frame. Load
/// convention: a payload hanging at rest reads its weight with negative z.
/// Includes the gripper weight (removed later by compensate), the contact
/// reaction, the configured offset, and seeded noise.
FtReading read_ft(const PlantState& state, const TableContact& world, const BiasModel& bias,
                  const AxisAngle& sensor_mount, const NoiseModel& noise, std::uint64_t tick,
                  double t);

/// Accelerometer reading, sensor frame. Reports coordinate acceleration
/// (gravity excluded); the estimation pipeline re-adds gravity explicitly,
/// so reporting proper acceleration here would double-count it.
AccelReading read_accel(const PlantState& state, const AxisAngle& sensor_mount,
                        const NoiseModel& noise, std::uint64_t tick, double t);

/// Attaches or detaches the payload. Idempotent.
PlantState set_gripper(const PlantState& state, bool attach, double m_u);

}  // namespace admitsim

#endif  // ADMITSIM_PLANT_HPP_
