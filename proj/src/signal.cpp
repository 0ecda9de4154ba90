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

#include "admitsim/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace admitsim {

void BiasModel::validate() const {
  if (!ft_offset.finite()) throw std::invalid_argument("BiasModel: ft_offset not finite");
  if (!(gripper_mass >= 0.0)) throw std::invalid_argument("BiasModel: gripper_mass must be >= 0");
  const double gmag = gravity.norm();
  if (!allow_nonstandard_gravity && (gmag < 9.0 || gmag > 10.5)) {
    throw std::invalid_argument("BiasModel: |gravity| outside [9.0, 10.5]");
  }
}

void NoiseModel::validate() const {
  if (!(ft_sigma >= 0.0)) throw std::invalid_argument("NoiseModel: ft_sigma must be >= 0");
  if (!(accel_sigma >= 0.0)) throw std::invalid_argument("NoiseModel: accel_sigma must be >= 0");
}

Vec3 compensate(const Vec3& raw_ft_base, const BiasModel& bias) {
  return raw_ft_base - bias.ft_offset - bias.gravity * bias.gripper_mass;
}

namespace {

// splitmix64; a fixed, platform-independent bit mixer.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1): 53-bit mantissa shifted into the open interval.
double to_unit(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller from a small counter-derived stream. Deterministic across
// platforms; std::normal_distribution is implementation-defined so it is
// not used here.
void gaussians(std::uint64_t state, double* out, int n) {
  for (int i = 0; i < n; i += 2) {
    state = mix64(state);
    const double u1 = to_unit(state);
    state = mix64(state);
    const double u2 = to_unit(state);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    out[i] = r * std::cos(a);
    if (i + 1 < n) out[i + 1] = r * std::sin(a);
  }
}

}  // namespace

std::pair<Vec3, Vec3> sample_noise(const NoiseModel& model, std::uint64_t tick) {
  if (model.ft_sigma == 0.0 && model.accel_sigma == 0.0) {
    return {Vec3{}, Vec3{}};
  }
  double g[6];
  gaussians(mix64(model.seed) ^ mix64(tick ^ 0xA02C0FFEEULL), g, 6);
  const Vec3 ft = Vec3{g[0], g[1], g[2]} * model.ft_sigma;
  const Vec3 accel = Vec3{g[3], g[4], g[5]} * model.accel_sigma;
  return {ft, accel};
}

}  // namespace admitsim
