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

#include "admitsim/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace admitsim {

namespace {
constexpr double kPi = std::numbers::pi;

double canonical_angle(double a) {
  // Wrap to (-pi, pi].
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}
}  // namespace

AxisAngle::AxisAngle() : axis_{0.0, 0.0, 1.0}, angle_(0.0) {}

AxisAngle::AxisAngle(const Vec3& axis, double angle) {
  if (!axis.finite() || !std::isfinite(angle)) {
    throw std::invalid_argument("AxisAngle: non-finite input");
  }
  const double n = axis.norm();
  if (n < 1e-12) {
    throw std::invalid_argument("AxisAngle: zero axis");
  }
  axis_ = axis / n;
  angle_ = canonical_angle(angle);
}

AxisAngle AxisAngle::inverse() const {
  AxisAngle r;
  r.axis_ = axis_;
  r.angle_ = canonical_angle(-angle_);
  return r;
}

Vec3 rodrigues_rotate(const AxisAngle& r, const Vec3& v) {
  const Vec3& k = r.axis();
  const double c = std::cos(r.angle());
  const double s = std::sin(r.angle());
  return v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
}

Vec3 to_base_frame(const AxisAngle& r, const Vec3& reading) {
  return rodrigues_rotate(r, reading);
}

}  // namespace admitsim
