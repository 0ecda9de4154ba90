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

#ifndef ADMITSIM_ESTIMATOR_HPP_
#define ADMITSIM_ESTIMATOR_HPP_

#include <utility>

#include "admitsim/geometry.hpp"
#include "admitsim/signal.hpp"

namespace admitsim {

/// Online payload-mass estimate.
///
/// m_u_hat may go negative while an external reaction (e.g. table contact)
/// pushes the tool up; m_u_applied is the clamped value actually fed to the
/// excitation force. `valid` is false whenever the vertical acceleration
/// denominator is inside the guard band, in which case the previous values
/// are held.
struct MassEstimate {
  double m_u_hat = 0.0;      // kg, filtered
  double m_u_applied = 0.0;  // kg, >= 0
  double raw_ratio = 0.0;    // kg, instantaneous pre-filter value
  bool valid = false;
};

struct EstimatorConfig {
  double accel_floor = 1.0;         // m/s^2; denominator guard, must be > 0
  int estimate_filter_window = 25;  // samples
  bool gate_after_grasp_only = true;

  void validate() const;
};

/// Scalar projections used by the mass estimate:
///   f_z = f . z_hat,   accel_z_grav = (a - g) . z_hat
/// Inputs must already be in the base frame. `f_base` is the supporting
/// force on the tool (positive z for a hanging load under gravity).
std::pair<double, double> vertical_projections(const Vec3& f_base, const Vec3& accel_base,
                                               const Vec3& g);

/// Single-payload mass estimator: m_u = f_z / accel_z_grav - m_g, with a
/// moving-average filter on the ratio, a guard on the denominator, and a
/// non-negativity gate on the applied value.
///
/// When fed the offset/gripper-compensated force, call step() with m_g = 0;
/// the gripper term has already been removed. Feeding the raw supported
/// force with the true gripper mass gives the same result (covered by a
/// unit test).
class MassEstimator {
 public:
  explicit MassEstimator(const EstimatorConfig& cfg);

  /// Estimation is gated off until enable() (grasp) when configured so.
  void enable();
  /// Clears filter state and the held estimate (release / re-grasp).
  void reset();
  bool enabled() const { return enabled_; }

  MassEstimate step(double f_z, double accel_z_grav, double m_g);

  const MassEstimate& last() const { return last_; }
  const EstimatorConfig& config() const { return cfg_; }

 private:
  EstimatorConfig cfg_;
  MovingAverage<double> filter_;
  MassEstimate last_;
  bool enabled_;
};

}  // namespace admitsim

#endif  // ADMITSIM_ESTIMATOR_HPP_
