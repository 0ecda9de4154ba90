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

#ifndef ADMITSIM_SCENARIO_JSON_HPP_
#define ADMITSIM_SCENARIO_JSON_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "admitsim/scenario.hpp"

namespace admitsim {

/// Raised on malformed scenario files; the message carries the offending
/// field path.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a scenario from JSON text. Requires "schema_version": 1; every
/// field is optional with the documented default; unknown keys are a hard
/// error (a typo must not silently change the physics).
Scenario scenario_from_json(const std::string& json_text);
Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& s);
std::string waypoints_to_json(const std::vector<Waypoint>& wps);

/// Grid description for the stability-map sweep.
struct StabilitySweep {
  double admittance_mass = 4.0;
  double payload_mass = 1.5;
  std::vector<double> k_a{300.0, 1800.0, 2500.0};
  std::vector<double> tau_v{0.0, 0.02, 0.05, 0.1};
  std::vector<double> t_f{0.0, 0.05, 0.2};
  std::vector<double> m_u_hat_gain{0.0, 0.5, 1.0, 1.5};
};

StabilitySweep sweep_from_json(const std::string& json_text);
StabilitySweep load_sweep(const std::string& path);

}  // namespace admitsim

#endif  // ADMITSIM_SCENARIO_JSON_HPP_
