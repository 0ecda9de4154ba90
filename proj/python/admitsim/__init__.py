# Copyright 2026 The admitsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Mass-adaptive admittance control simulator."""

try:
    from ._core import (  # packaged extension
        assess_polynomial,
        characteristic_polynomial,
        critical_damping,
        default_waypoints,
        experiment_suite,
        predicted_sag,
        rodrigues_rotate,
        routh_hurwitz,
        run_preset,
        run_scenario_json,
    )
except ImportError:  # in-tree build: extension sits next to the package
    from _core import (
        assess_polynomial,
        characteristic_polynomial,
        critical_damping,
        default_waypoints,
        experiment_suite,
        predicted_sag,
        rodrigues_rotate,
        routh_hurwitz,
        run_preset,
        run_scenario_json,
    )

__all__ = [
    "assess_polynomial",
    "characteristic_polynomial",
    "critical_damping",
    "default_waypoints",
    "experiment_suite",
    "predicted_sag",
    "rodrigues_rotate",
    "routh_hurwitz",
    "run_preset",
    "run_scenario_json",
]

__version__ = "0.1.0"
