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

#include "admitsim/plant.hpp"

#include <algorithm>
#include <stdexcept>

namespace admitsim {

void InnerLoopModel::validate() const {
  if (!(tau_v > 0.0)) throw std::invalid_argument("InnerLoopModel: tau_v must be > 0");
}

void TableContact::validate() const {
  if (!(k_contact >= 0.0)) throw std::invalid_argument("TableContact: k_contact must be >= 0");
  if (!(d_contact >= 0.0)) throw std::invalid_argument("TableContact: d_contact must be >= 0");
  if (!(x_min <= x_max)) throw std::invalid_argument("TableContact: x_min must be <= x_max");
}

double contact_force(const PlantState& state, const TableContact& world) {
  if (state.p.x < world.x_min || state.p.x > world.x_max) return 0.0;
  const double pen = world.z_table - state.p.z;
  if (pen <= 0.0) return 0.0;
  const double f = world.k_contact * pen - world.d_contact * state.v.z;
  return std::max(f, 0.0);
}

PlantState plant_step(const PlantState& state, const Vec3& v_cmd, const TableContact& world,
                      const InnerLoopModel& inner, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("plant_step: dt must be > 0");
  (void)world;  // contact enters only through the sensed wrench
  PlantState next = state;
  const double alpha = dt / inner.tau_v;
  next.v = state.v + (v_cmd - state.v) * alpha;
  next.p = state.p + next.v * dt;
  next.a = (next.v - state.v) / dt;
  return next;
}

FtReading read_ft(const PlantState& state, const TableContact& world, const BiasModel& bias,
                  const AxisAngle& sensor_mount, const NoiseModel& noise, std::uint64_t tick,
                  double t) {
  const double m_tool = bias.gripper_mass + (state.payload_attached ? state.m_u_true : 0.0);
  // Load on the wrist: it supports m_tool*(a - g), and the table pushes
  // the tool (and therefore the wrist reading) up by the contact force.
  Vec3 w_base = (bias.gravity - state.a) * m_tool;
  w_base.z += contact_force(state, world);
  w_base += bias.ft_offset;
  Vec3 reading = rodrigues_rotate(sensor_mount.inverse(), w_base);
  reading += sample_noise(noise, tick).first;
  return FtReading{t, reading};
}

AccelReading read_accel(const PlantState& state, const AxisAngle& sensor_mount,
                        const NoiseModel& noise, std::uint64_t tick, double t) {
  Vec3 reading = rodrigues_rotate(sensor_mount.inverse(), state.a);
  reading += sample_noise(noise, tick).second;
  return AccelReading{t, reading};
}

PlantState set_gripper(const PlantState& state, bool attach, double m_u) {
  if (m_u < 0.0) throw std::invalid_argument("set_gripper: m_u must be >= 0");
  PlantState next = state;
  next.payload_attached = attach;
  next.m_u_true = attach ? m_u : 0.0;
  return next;
}

}  // namespace admitsim
