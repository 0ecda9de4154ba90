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

#include "admitsim/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace admitsim {

void EstimatorConfig::validate() const {
  if (!(accel_floor > 0.0)) {
    throw std::invalid_argument("EstimatorConfig: accel_floor must be > 0");
  }
  if (estimate_filter_window < 1) {
    throw std::invalid_argument("EstimatorConfig: estimate_filter_window must be >= 1");
  }
}

std::pair<double, double> vertical_projections(const Vec3& f_base, const Vec3& accel_base,
                                               const Vec3& g) {
  return {f_base.z, accel_base.z - g.z};
}

MassEstimator::MassEstimator(const EstimatorConfig& cfg)
    : cfg_(cfg), filter_(cfg.estimate_filter_window), enabled_(!cfg.gate_after_grasp_only) {
  cfg_.validate();
}

void MassEstimator::enable() { enabled_ = true; }

void MassEstimator::reset() {
  filter_.reset();
  last_ = MassEstimate{};
  enabled_ = !cfg_.gate_after_grasp_only;
}

MassEstimate MassEstimator::step(double f_z, double accel_z_grav, double m_g) {
  if (m_g < 0.0) throw std::invalid_argument("MassEstimator: m_g must be >= 0");
  if (!enabled_) {
    last_ = MassEstimate{};
    return last_;
  }
  if (std::abs(accel_z_grav) < cfg_.accel_floor) {
    // Denominator inside the guard band: hold the previous estimate.
    last_.valid = false;
    return last_;
  }
  MassEstimate e;
  e.valid = true;
  e.raw_ratio = f_z / accel_z_grav - m_g;
  e.m_u_hat = filter_.step(e.raw_ratio);
  e.m_u_applied = std::max(e.m_u_hat, 0.0);
  last_ = e;
  return e;
}

}  // namespace admitsim
