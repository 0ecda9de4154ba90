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

#ifndef ADMITSIM_CONTROLLER_HPP_
#define ADMITSIM_CONTROLLER_HPP_

#include "admitsim/geometry.hpp"

namespace admitsim {

/// Virtual mass/damping/stiffness of the second-order compliance target.
/// Scalar gains, applied uniformly to all Cartesian axes (the gain
/// matrices are diagonal with equal entries).
struct AdmittanceParams {
  double m_a = 4.0;    // kg
  double b_a = 0.0;    // N*s/m
  double k_a = 0.0;    // N/m

  /// b = 2*sqrt(m*k); fastest non-overshooting response.
  static AdmittanceParams critically_damped(double m_a, double k_a);

  /// Throws std::invalid_argument if m_a <= 0 or b_a/k_a < 0.
  void validate() const;
};

double critical_damping(double m_a, double k_a);

/// Ideal-admittance state: the pose the virtual mass-spring-damper would
/// occupy, advanced only by integrate_step.
struct AdmittanceState {
  Vec3 p_a{};  // m
  Vec3 v_a{};  // m/s
};

/// Virtual control force that cancels the estimated payload weight.
/// Vertical by construction.
struct ExcitationForce {
  double z = 0.0;  // N
  Vec3 as_vec() const { return {0.0, 0.0, z}; }
};

/// Acceleration of the ideal admittance system about a static reference:
///   a = (f_ext + f_exc - b_a*v_a - k_a*(p_a - p_0)) / m_a
Vec3 admittance_accel(const AdmittanceParams& params, const AdmittanceState& state,
                      const Vec3& p_0, const Vec3& f_ext, const ExcitationForce& f_exc);

/// Semi-implicit Euler step: v' = v + a*dt, p' = p + v'*dt.
AdmittanceState integrate_step(const AdmittanceState& state, const Vec3& accel, double dt);

/// RK4 step of the same dynamics with inputs frozen over the interval.
/// Reference integrator for cross-validation; the control loop itself
/// uses integrate_step.
AdmittanceState rk4_reference_step(const AdmittanceParams& params, const AdmittanceState& state,
                                   const Vec3& p_0, const Vec3& f_ext,
                                   const ExcitationForce& f_exc, double dt);

/// Excitation force from the gated mass estimate and the gravity-corrected
/// vertical acceleration (= +g magnitude in quasi-static motion). The
/// resulting +z force cancels the hanging payload's weight term in the
/// admittance dynamics.
ExcitationForce excitation_from_estimate(double m_u_hat, double accel_z_grav);

}  // namespace admitsim

#endif  // ADMITSIM_CONTROLLER_HPP_
