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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "admitsim/harness.hpp"
#include "admitsim/scenario_json.hpp"
#include "admitsim/stability.hpp"
#include "admitsim/trace_io.hpp"

namespace py = pybind11;
using namespace admitsim;

namespace {

py::tuple vec_to_tuple(const Vec3& v) { return py::make_tuple(v.x, v.y, v.z); }

Vec3 tuple_to_vec(const py::sequence& s) {
  if (py::len(s) != 3) throw py::value_error("expected a 3-sequence");
  return {s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
}

py::dict report_to_dict(const RunReport& r) {
  py::dict d;
  d["completed"] = r.completed;
  d["outcome"] = r.outcome;
  d["sag_mm"] = r.sag_mm;
  d["rmse_mm"] = r.rmse_mm;
  d["estimate_mean_g"] = r.estimate_mean_g;
  d["estimate_std_g"] = r.estimate_std_g;
  d["waypoint_times"] = r.waypoint_times;
  d["grasp_tick"] = r.grasp_tick;
  return d;
}

py::dict run_to_dict(const SimResult& res, bool with_trace) {
  py::dict d;
  d["report"] = report_to_dict(res.report);
  if (with_trace) {
    py::list rows;
    for (const auto& r : res.trace) {
      py::dict row;
      row["t"] = r.t;
      row["p"] = vec_to_tuple(r.p_true);
      row["p_a"] = vec_to_tuple(r.p_a);
      row["p_0"] = vec_to_tuple(r.p_0);
      row["v_cmd"] = vec_to_tuple(r.v_cmd);
      row["f_ext"] = vec_to_tuple(r.f_ext_filtered);
      row["f_exc_z"] = r.f_exc_z;
      row["m_u_hat"] = r.m_u_hat;
      row["m_u_applied"] = r.m_u_applied;
      row["wp_index"] = r.wp_index;
      rows.append(row);
    }
    d["trace"] = rows;
  }
  return d;
}

Scenario preset_by_name(const std::string& name) {
  if (name == "exp1" || name == "exp2" || name == "exp3" || name == "exp4") {
    return experiment_preset(name[3] - '0');
  }
  if (name == "contact_grasp") return contact_grasp_preset();
  if (name == "noisy_hold") return noisy_hold_preset();
  throw py::value_error("unknown preset: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mass-adaptive admittance control simulation core";

  m.def(
      "rodrigues_rotate",
      [](const py::sequence& axis, double angle, const py::sequence& v) {
        return vec_to_tuple(rodrigues_rotate(AxisAngle(tuple_to_vec(axis), angle),
                                             tuple_to_vec(v)));
      },
      py::arg("axis"), py::arg("angle"), py::arg("v"),
      "Rotate v about axis by angle (radians).");

  m.def("critical_damping", &critical_damping, py::arg("m_a"), py::arg("k_a"),
        "Damping 2*sqrt(m*k) of the fastest non-overshooting response.");

  m.def("predicted_sag", &predicted_sag, py::arg("m_u"), py::arg("g_mag"), py::arg("k_zz"),
        "Static vertical offset m*g/k of the virtual compliance under a payload.");

  m.def(
      "run_preset",
      [](const std::string& name, bool with_trace) {
        return run_to_dict(run_scenario(preset_by_name(name)), with_trace);
      },
      py::arg("name"), py::arg("with_trace") = false,
      "Run a built-in scenario (exp1..exp4, contact_grasp, noisy_hold).");

  m.def(
      "run_scenario_json",
      [](const std::string& text, bool with_trace) {
        return run_to_dict(run_scenario(scenario_from_json(text)), with_trace);
      },
      py::arg("json_text"), py::arg("with_trace") = false,
      "Run a scenario described by JSON text (schema_version 1).");

  m.def(
      "experiment_suite",
      []() {
        const SuiteReport suite = run_experiment_suite();
        py::list rows;
        for (const auto& r : suite.rows) {
          py::dict d;
          d["exp_id"] = r.exp_id;
          d["k"] = r.k_a;
          d["compensation"] = r.compensation;
          d["completed"] = r.completed;
          d["sag_sim_mm"] = r.sag_sim_mm;
          d["sag_pred_mm"] = r.sag_eq_mm;
          d["rmse_mm"] = r.rmse_mm;
          d["estimate_mean_g"] = r.estimate_mean_g;
          d["note"] = r.note;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["checks_passed"] = suite.checks_passed;
        out["check_messages"] = suite.check_messages;
        return out;
      },
      "Run experiments 1-4 and the built-in consistency checks.");

  m.def(
      "characteristic_polynomial",
      [](double m_a, double b_a, double k_a, double m_u, double m_u_hat_gain, double t_f,
         double tau_v) {
        const AdmittanceParams params{m_a, b_a, k_a};
        return characteristic_polynomial(
            params, m_u, RationalTransfer::first_order_lag(m_u_hat_gain * m_u, t_f),
            RationalTransfer::first_order_lag(1.0, tau_v));
      },
      py::arg("m_a"), py::arg("b_a"), py::arg("k_a"), py::arg("m_u"),
      py::arg("m_u_hat_gain") = 1.0, py::arg("t_f") = 0.05, py::arg("tau_v") = 0.05,
      "Closed-loop characteristic polynomial, ascending coefficients.");

  m.def(
      "assess_polynomial",
      [](const std::vector<double>& coeffs) {
        const StabilityVerdict v = assess(coeffs);
        py::dict d;
        d["stable"] = v.stable;
        d["degenerate"] = v.degenerate;
        d["max_real_part"] = v.max_real_part;
        d["roots"] = v.roots;
        return d;
      },
      py::arg("coeffs"), "Root-based stability verdict for ascending coefficients.");

  m.def("routh_hurwitz", &routh_hurwitz, py::arg("coeffs"),
        "True iff all roots lie strictly in the left half-plane.");

  m.def(
      "default_waypoints",
      []() {
        py::list out;
        for (const auto& wp : default_waypoints()) {
          py::dict d;
          d["p"] = vec_to_tuple(wp.target);
          d["event"] = wp.event == WaypointEvent::kGrasp     ? "grasp"
                       : wp.event == WaypointEvent::kRelease ? "release"
                                                             : "none";
          d["mass"] = wp.grasp_mass;
          d["dwell"] = wp.dwell_s;
          out.append(d);
        }
        return out;
      },
      "The canonical six-waypoint bin-to-shelf path.");
}
