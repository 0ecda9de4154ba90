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

#include "admitsim/controller.hpp"

#include <cmath>
#include <stdexcept>

namespace admitsim {

double critical_damping(double m_a, double k_a) {
  if (m_a <= 0.0) throw std::invalid_argument("critical_damping: m_a must be > 0");
  if (k_a < 0.0) throw std::invalid_argument("critical_damping: k_a must be >= 0");
  return 2.0 * std::sqrt(m_a * k_a);
}

AdmittanceParams AdmittanceParams::critically_damped(double m_a, double k_a) {
  AdmittanceParams p;
  p.m_a = m_a;
  p.k_a = k_a;
  p.b_a = critical_damping(m_a, k_a);
  return p;
}

void AdmittanceParams::validate() const {
  if (!(m_a > 0.0)) throw std::invalid_argument("AdmittanceParams: m_a must be > 0");
  if (!(b_a >= 0.0)) throw std::invalid_argument("AdmittanceParams: b_a must be >= 0");
  if (!(k_a >= 0.0)) throw std::invalid_argument("AdmittanceParams: k_a must be >= 0");
}

Vec3 admittance_accel(const AdmittanceParams& params, const AdmittanceState& state,
                      const Vec3& p_0, const Vec3& f_ext, const ExcitationForce& f_exc) {
  const Vec3 spring = (state.p_a - p_0) * params.k_a;
  const Vec3 damper = state.v_a * params.b_a;
  return (f_ext + f_exc.as_vec() - damper - spring) / params.m_a;
}

AdmittanceState integrate_step(const AdmittanceState& state, const Vec3& accel, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_step: dt must be > 0");
  AdmittanceState next;
  next.v_a = state.v_a + accel * dt;
  next.p_a = state.p_a + next.v_a * dt;
  return next;
}

AdmittanceState rk4_reference_step(const AdmittanceParams& params, const AdmittanceState& state,
                                   const Vec3& p_0, const Vec3& f_ext,
                                   const ExcitationForce& f_exc, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_reference_step: dt must be > 0");
  auto deriv = [&](const AdmittanceState& s) {
    AdmittanceState d;
    d.p_a = s.v_a;
    d.v_a = admittance_accel(params, s, p_0, f_ext, f_exc);
    return d;
  };
  auto advance = [](const AdmittanceState& s, const AdmittanceState& d, double h) {
    AdmittanceState r;
    r.p_a = s.p_a + d.p_a * h;
    r.v_a = s.v_a + d.v_a * h;
    return r;
  };
  const AdmittanceState k1 = deriv(state);
  const AdmittanceState k2 = deriv(advance(state, k1, dt / 2.0));
  const AdmittanceState k3 = deriv(advance(state, k2, dt / 2.0));
  const AdmittanceState k4 = deriv(advance(state, k3, dt));
  AdmittanceState next;
  next.p_a = state.p_a + (k1.p_a + (k2.p_a + k3.p_a) * 2.0 + k4.p_a) * (dt / 6.0);
  next.v_a = state.v_a + (k1.v_a + (k2.v_a + k3.v_a) * 2.0 + k4.v_a) * (dt / 6.0);
  return next;
}

ExcitationForce excitation_from_estimate(double m_u_hat, double accel_z_grav) {
  if (m_u_hat < 0.0) throw std::invalid_argument("excitation_from_estimate: negative mass");
  return ExcitationForce{m_u_hat * accel_z_grav};
}

}  // namespace admitsim
