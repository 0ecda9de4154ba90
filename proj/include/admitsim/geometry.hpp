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

#ifndef ADMITSIM_GEOMETRY_HPP_
#define ADMITSIM_GEOMETRY_HPP_

#include <cmath>

namespace admitsim {

/// 3-component Cartesian vector. Units (m, m/s, m/s^2, N) are carried by
/// context; components must stay finite.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Rotation as a unit axis and an angle in (-pi, pi]. Construction
/// normalizes the axis and canonicalizes the angle; a zero axis is
/// rejected so that a misconfigured frame fails loudly instead of
/// silently acting as identity.
class AxisAngle {
 public:
  AxisAngle();  // identity: axis (0,0,1), angle 0
  AxisAngle(const Vec3& axis, double angle);

  static AxisAngle identity() { return AxisAngle(); }

  const Vec3& axis() const { return axis_; }
  double angle() const { return angle_; }

  /// Same axis, negated angle.
  AxisAngle inverse() const;

 private:
  Vec3 axis_;
  double angle_;
};

/// Rotates v about r.axis by r.angle. Norm-preserving.
Vec3 rodrigues_rotate(const AxisAngle& r, const Vec3& v);

/// Expresses a sensor-frame reading in the base frame, where r is the
/// sensor-to-base rotation.
Vec3 to_base_frame(const AxisAngle& r, const Vec3& reading);

}  // namespace admitsim

#endif  // ADMITSIM_GEOMETRY_HPP_
