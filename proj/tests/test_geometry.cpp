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

#include <doctest.h>

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

using namespace admitsim;
constexpr double kPi = std::numbers::pi;

namespace {

// Independent oracle: rotate through Eigen's angle-axis representation.
Vec3 eigen_rotate(const Vec3& axis, double angle, const Vec3& v) {
  const Eigen::Vector3d a(axis.x, axis.y, axis.z);
  const Eigen::Vector3d out =
      Eigen::AngleAxisd(angle, a.normalized()) * Eigen::Vector3d(v.x, v.y, v.z);
  return {out.x(), out.y(), out.z()};
}

void check_close(const Vec3& got, const Vec3& want, double tol) {
  CHECK(std::abs(got.x - want.x) <= tol);
  CHECK(std::abs(got.y - want.y) <= tol);
  CHECK(std::abs(got.z - want.z) <= tol);
}

}  // namespace

TEST_CASE("zero angle is the identity for any axis") {
  const Vec3 v{3.0, -1.0, 2.0};
  check_close(rodrigues_rotate(AxisAngle({0, 0, 1}, 0.0), v), v, 0.0);
  check_close(rodrigues_rotate(AxisAngle({0.3, -2.0, 0.5}, 0.0), v), v, 0.0);
}

TEST_CASE("quarter turn about z") {
  const Vec3 out = rodrigues_rotate(AxisAngle({0, 0, 1}, kPi / 2.0), {1, 0, 0});
  check_close(out, {0, 1, 0}, 1e-15);
}

TEST_CASE("eighth turn about z matches the rotation-matrix oracle") {
  const Vec3 out = rodrigues_rotate(AxisAngle({0, 0, 1}, kPi / 4.0), {1, 0, 0});
  check_close(out, {0.7071068, 0.7071068, 0.0}, 1e-7);
  check_close(out, eigen_rotate({0, 0, 1}, kPi / 4.0, {1, 0, 0}), 1e-14);
}

TEST_CASE("to_base_frame identity and half turn") {
  const Vec3 g{0, 0, -9.81};
  check_close(to_base_frame(AxisAngle::identity(), g), g, 0.0);
  const AxisAngle half_x({1, 0, 0}, kPi);
  check_close(to_base_frame(half_x, g), {0, 0, 9.81}, 1e-12);
  check_close(to_base_frame(half_x, g), eigen_rotate({1, 0, 0}, kPi, g), 1e-12);
}

TEST_CASE("rotation is an isometry and matches the oracle on random input") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    Vec3 axis{u(rng), u(rng), u(rng)};
    if (axis.norm() < 1e-3) axis.z += 1.0;
    const double angle = 4.0 * kPi * u(rng);
    const Vec3 v{10.0 * u(rng), 10.0 * u(rng), 10.0 * u(rng)};
    const AxisAngle r(axis, angle);
    const Vec3 out = rodrigues_rotate(r, v);
    CHECK(std::abs(out.norm() - v.norm()) <= 1e-10 * (1.0 + v.norm()));
    check_close(out, eigen_rotate(axis, angle, v), 1e-12 * (1.0 + v.norm()));
    // Inverse round trip.
    check_close(rodrigues_rotate(r, rodrigues_rotate(r.inverse(), v)), v,
                1e-10 * (1.0 + v.norm()));
  }
}

TEST_CASE("axis is normalized and the angle canonicalized") {
  const AxisAngle r({0, 0, 10.0}, 3.0 * kPi);
  CHECK(std::abs(r.axis().norm() - 1.0) <= 1e-12);
  CHECK(r.angle() == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(r.angle() <= kPi);
  CHECK(AxisAngle({0, 1, 0}, -kPi).angle() == doctest::Approx(kPi));
}

TEST_CASE("zero axis is rejected") {
  CHECK_THROWS_AS(AxisAngle({0, 0, 0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AxisAngle({1e-13, 0, 0}, 1.0), std::invalid_argument);
}
