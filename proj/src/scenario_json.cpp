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

#include "admitsim/scenario_json.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace admitsim {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail(path + "." + key, "unknown field");
  }
}

double get_num(const json& obj, const std::string& path, const std::string& key, double dflt) {
  if (!obj.contains(key)) return dflt;
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const std::string& key, int dflt) {
  if (!obj.contains(key)) return dflt;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

bool get_bool(const json& obj, const std::string& path, const std::string& key, bool dflt) {
  if (!obj.contains(key)) return dflt;
  const auto& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

Vec3 get_vec3(const json& obj, const std::string& path, const std::string& key,
              const Vec3& dflt) {
  if (!obj.contains(key)) return dflt;
  const auto& v = obj.at(key);
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number()) {
    fail(path + "." + key, "expected [x, y, z]");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::vector<double> get_num_list(const json& obj, const std::string& path,
                                 const std::string& key, std::vector<double> dflt) {
  if (!obj.contains(key)) return dflt;
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) fail(path + "." + key, "expected a non-empty array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail(path + "." + key, "expected numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

json parse_root(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("root: expected an object");
  if (!root.contains("schema_version")) throw ConfigError("schema_version: missing");
  if (!root.at("schema_version").is_number_integer() ||
      root.at("schema_version").get<int>() != 1) {
    throw ConfigError("schema_version: expected 1");
  }
  return root;
}

}  // namespace

Scenario scenario_from_json(const std::string& json_text) {
  const json root = parse_root(json_text);
  require_keys(root, "root",
               {"schema_version", "name", "dt", "duration_max", "eps", "waypoint_timeout",
                "settle_after_complete", "compensation_enabled", "payload_mass", "admittance",
                "noise", "bias", "inner", "table", "estimator", "sensor_mount", "signal",
                "waypoints"});
  Scenario s;
  if (root.contains("name")) {
    if (!root.at("name").is_string()) fail("name", "expected a string");
    s.name = root.at("name").get<std::string>();
  }
  s.dt = get_num(root, "root", "dt", s.dt);
  s.duration_max = get_num(root, "root", "duration_max", s.duration_max);
  s.eps = get_num(root, "root", "eps", s.eps);
  s.waypoint_timeout = get_num(root, "root", "waypoint_timeout", s.waypoint_timeout);
  s.settle_after_complete =
      get_num(root, "root", "settle_after_complete", s.settle_after_complete);
  s.compensation_enabled =
      get_bool(root, "root", "compensation_enabled", s.compensation_enabled);
  s.payload_mass = get_num(root, "root", "payload_mass", s.payload_mass);

  if (root.contains("admittance")) {
    const auto& a = root.at("admittance");
    require_keys(a, "admittance", {"m", "k", "b"});
    const double m = get_num(a, "admittance", "m", 4.0);
    const double k = get_num(a, "admittance", "k", 300.0);
    if (a.contains("b")) {
      s.admittance = AdmittanceParams{m, get_num(a, "admittance", "b", 0.0), k};
    } else {
      if (!(m > 0.0)) fail("admittance.m", "must be > 0");
      if (k < 0.0) fail("admittance.k", "must be >= 0");
      s.admittance = AdmittanceParams::critically_damped(m, k);
    }
  }
  if (root.contains("noise")) {
    const auto& n = root.at("noise");
    require_keys(n, "noise", {"ft_sigma", "accel_sigma", "seed"});
    s.noise.ft_sigma = get_num(n, "noise", "ft_sigma", s.noise.ft_sigma);
    s.noise.accel_sigma = get_num(n, "noise", "accel_sigma", s.noise.accel_sigma);
    if (n.contains("seed")) {
      if (!n.at("seed").is_number_integer()) fail("noise.seed", "expected an integer");
      s.noise.seed = n.at("seed").get<std::uint64_t>();
    }
  }
  if (root.contains("bias")) {
    const auto& b = root.at("bias");
    require_keys(b, "bias",
                 {"ft_offset", "gripper_mass", "gravity", "allow_nonstandard_gravity"});
    s.bias.ft_offset = get_vec3(b, "bias", "ft_offset", s.bias.ft_offset);
    s.bias.gripper_mass = get_num(b, "bias", "gripper_mass", s.bias.gripper_mass);
    s.bias.gravity = get_vec3(b, "bias", "gravity", s.bias.gravity);
    s.bias.allow_nonstandard_gravity =
        get_bool(b, "bias", "allow_nonstandard_gravity", s.bias.allow_nonstandard_gravity);
  }
  if (root.contains("inner")) {
    const auto& i = root.at("inner");
    require_keys(i, "inner", {"tau_v"});
    s.inner.tau_v = get_num(i, "inner", "tau_v", s.inner.tau_v);
  }
  if (root.contains("table")) {
    const auto& t = root.at("table");
    require_keys(t, "table", {"z_table", "k_contact", "d_contact", "x_min", "x_max"});
    s.table.z_table = get_num(t, "table", "z_table", s.table.z_table);
    s.table.k_contact = get_num(t, "table", "k_contact", s.table.k_contact);
    s.table.d_contact = get_num(t, "table", "d_contact", s.table.d_contact);
    s.table.x_min = get_num(t, "table", "x_min", s.table.x_min);
    s.table.x_max = get_num(t, "table", "x_max", s.table.x_max);
  }
  if (root.contains("estimator")) {
    const auto& e = root.at("estimator");
    require_keys(e, "estimator",
                 {"accel_floor", "estimate_filter_window", "gate_after_grasp_only"});
    s.estimator.accel_floor = get_num(e, "estimator", "accel_floor", s.estimator.accel_floor);
    s.estimator.estimate_filter_window =
        get_int(e, "estimator", "estimate_filter_window", s.estimator.estimate_filter_window);
    s.estimator.gate_after_grasp_only =
        get_bool(e, "estimator", "gate_after_grasp_only", s.estimator.gate_after_grasp_only);
  }
  if (root.contains("sensor_mount")) {
    const auto& m = root.at("sensor_mount");
    require_keys(m, "sensor_mount", {"axis", "angle_rad"});
    const Vec3 axis = get_vec3(m, "sensor_mount", "axis", Vec3{0.0, 0.0, 1.0});
    const double angle = get_num(m, "sensor_mount", "angle_rad", 0.0);
    try {
      s.sensor_mount = AxisAngle(axis, angle);
    } catch (const std::invalid_argument& e) {
      fail("sensor_mount", e.what());
    }
  }
  if (root.contains("signal")) {
    const auto& g = root.at("signal");
    require_keys(g, "signal", {"ft_window", "accel_window"});
    s.ft_filter_window = get_int(g, "signal", "ft_window", s.ft_filter_window);
    s.accel_filter_window = get_int(g, "signal", "accel_window", s.accel_filter_window);
  }
  if (root.contains("waypoints")) {
    const auto& w = root.at("waypoints");
    if (!w.is_array() || w.empty()) fail("waypoints", "expected a non-empty array");
    s.waypoints.clear();
    for (size_t i = 0; i < w.size(); ++i) {
      const std::string path = "waypoints[" + std::to_string(i) + "]";
      const auto& e = w[i];
      require_keys(e, path, {"p", "event", "mass", "dwell", "event_delay"});
      Waypoint wp;
      if (!e.contains("p")) fail(path + ".p", "missing");
      wp.target = get_vec3(e, path, "p", Vec3{});
      std::string event = "none";
      if (e.contains("event")) {
        if (!e.at("event").is_string()) fail(path + ".event", "expected a string");
        event = e.at("event").get<std::string>();
      }
      if (event == "none") {
        wp.event = WaypointEvent::kNone;
      } else if (event == "grasp") {
        wp.event = WaypointEvent::kGrasp;
        wp.grasp_mass = get_num(e, path, "mass", s.payload_mass);
      } else if (event == "release") {
        wp.event = WaypointEvent::kRelease;
      } else {
        fail(path + ".event", "expected none|grasp|release");
      }
      wp.dwell_s = get_num(e, path, "dwell", 0.0);
      wp.event_delay_s = get_num(e, path, "event_delay", 0.0);
      s.waypoints.push_back(wp);
    }
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return scenario_from_json(ss.str());
}

namespace {
json vec3_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json waypoints_json(const std::vector<Waypoint>& wps) {
  json arr = json::array();
  for (const auto& wp : wps) {
    json e;
    e["p"] = vec3_to_json(wp.target);
    switch (wp.event) {
      case WaypointEvent::kNone: e["event"] = "none"; break;
      case WaypointEvent::kGrasp:
        e["event"] = "grasp";
        e["mass"] = wp.grasp_mass;
        break;
      case WaypointEvent::kRelease: e["event"] = "release"; break;
    }
    e["dwell"] = wp.dwell_s;
    if (wp.event_delay_s > 0.0) e["event_delay"] = wp.event_delay_s;
    arr.push_back(e);
  }
  return arr;
}
}  // namespace

std::string scenario_to_json(const Scenario& s) {
  json root;
  root["schema_version"] = 1;
  root["name"] = s.name;
  root["dt"] = s.dt;
  root["duration_max"] = s.duration_max;
  root["eps"] = s.eps;
  root["waypoint_timeout"] = s.waypoint_timeout;
  root["settle_after_complete"] = s.settle_after_complete;
  root["compensation_enabled"] = s.compensation_enabled;
  root["payload_mass"] = s.payload_mass;
  root["admittance"] = {{"m", s.admittance.m_a}, {"k", s.admittance.k_a}, {"b", s.admittance.b_a}};
  root["noise"] = {{"ft_sigma", s.noise.ft_sigma},
                   {"accel_sigma", s.noise.accel_sigma},
                   {"seed", s.noise.seed}};
  root["bias"] = {{"ft_offset", vec3_to_json(s.bias.ft_offset)},
                  {"gripper_mass", s.bias.gripper_mass},
                  {"gravity", vec3_to_json(s.bias.gravity)},
                  {"allow_nonstandard_gravity", s.bias.allow_nonstandard_gravity}};
  root["inner"] = {{"tau_v", s.inner.tau_v}};
  root["table"] = {{"z_table", s.table.z_table},
                   {"k_contact", s.table.k_contact},
                   {"d_contact", s.table.d_contact},
                   {"x_min", s.table.x_min},
                   {"x_max", s.table.x_max}};
  root["estimator"] = {{"accel_floor", s.estimator.accel_floor},
                       {"estimate_filter_window", s.estimator.estimate_filter_window},
                       {"gate_after_grasp_only", s.estimator.gate_after_grasp_only}};
  root["sensor_mount"] = {{"axis", vec3_to_json(s.sensor_mount.axis())},
                          {"angle_rad", s.sensor_mount.angle()}};
  root["signal"] = {{"ft_window", s.ft_filter_window}, {"accel_window", s.accel_filter_window}};
  root["waypoints"] = waypoints_json(s.waypoints);
  return root.dump(2) + "\n";
}

std::string waypoints_to_json(const std::vector<Waypoint>& wps) {
  json root;
  root["schema_version"] = 1;
  root["waypoints"] = waypoints_json(wps);
  return root.dump(2) + "\n";
}

StabilitySweep sweep_from_json(const std::string& json_text) {
  const json root = parse_root(json_text);
  require_keys(root, "root", {"schema_version", "admittance_mass", "payload_mass", "grid"});
  StabilitySweep sweep;
  sweep.admittance_mass = get_num(root, "root", "admittance_mass", sweep.admittance_mass);
  sweep.payload_mass = get_num(root, "root", "payload_mass", sweep.payload_mass);
  if (!(sweep.admittance_mass > 0.0)) fail("admittance_mass", "must be > 0");
  if (sweep.payload_mass < 0.0) fail("payload_mass", "must be >= 0");
  if (root.contains("grid")) {
    const auto& g = root.at("grid");
    require_keys(g, "grid", {"k_a", "tau_v", "T_f", "m_u_hat_gain"});
    sweep.k_a = get_num_list(g, "grid", "k_a", sweep.k_a);
    sweep.tau_v = get_num_list(g, "grid", "tau_v", sweep.tau_v);
    sweep.t_f = get_num_list(g, "grid", "T_f", sweep.t_f);
    sweep.m_u_hat_gain = get_num_list(g, "grid", "m_u_hat_gain", sweep.m_u_hat_gain);
  }
  for (double k : sweep.k_a) {
    if (k < 0.0) fail("grid.k_a", "must be >= 0");
  }
  for (double tau : sweep.tau_v) {
    if (tau < 0.0) fail("grid.tau_v", "must be >= 0");
  }
  for (double tf : sweep.t_f) {
    if (tf < 0.0) fail("grid.T_f", "must be >= 0");
  }
  return sweep;
}

StabilitySweep load_sweep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read sweep file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return sweep_from_json(ss.str());
}

}  // namespace admitsim
