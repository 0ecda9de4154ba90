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

#include "admitsim/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace admitsim {

const char* const kTraceCsvHeader =
    "t,px,py,pz,pax,pay,paz,p0x,p0y,p0z,vcx,vcy,vcz,fx,fy,fz,fexcz,mu_hat,mu_applied,wp_index";

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: byte-stable newlines
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

// Fixed formatting keeps outputs byte-identical across runs.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void write_trace_csv(const std::string& path, const std::vector<TraceRecord>& trace) {
  std::ofstream out = open_or_throw(path);
  out << kTraceCsvHeader << "\n";
  for (const auto& r : trace) {
    out << num(r.t) << ',' << num(r.p_true.x) << ',' << num(r.p_true.y) << ','
        << num(r.p_true.z) << ',' << num(r.p_a.x) << ',' << num(r.p_a.y) << ','
        << num(r.p_a.z) << ',' << num(r.p_0.x) << ',' << num(r.p_0.y) << ','
        << num(r.p_0.z) << ',' << num(r.v_cmd.x) << ',' << num(r.v_cmd.y) << ','
        << num(r.v_cmd.z) << ',' << num(r.f_ext_filtered.x) << ','
        << num(r.f_ext_filtered.y) << ',' << num(r.f_ext_filtered.z) << ','
        << num(r.f_exc_z) << ',' << num(r.m_u_hat) << ',' << num(r.m_u_applied) << ','
        << r.wp_index << "\n";
  }
}

void write_report_csv(const std::string& path, const RunReport& report) {
  std::ofstream out = open_or_throw(path);
  out << "completed,outcome,sag_mm,rmse_mm,estimate_mean_g,estimate_std_g,waypoint_times\n";
  out << (report.completed ? 1 : 0) << ',' << report.outcome << ',' << num(report.sag_mm)
      << ',' << num(report.rmse_mm) << ',' << num(report.estimate_mean_g) << ','
      << num(report.estimate_std_g) << ',';
  for (size_t i = 0; i < report.waypoint_times.size(); ++i) {
    if (i) out << ';';
    out << num(report.waypoint_times[i]);
  }
  out << "\n";
}

void write_suite_csv(const std::string& path, const SuiteReport& suite) {
  std::ofstream out = open_or_throw(path);
  out << "exp_id,k,compensation,completed,sag_sim_mm,sag_pred_mm,rmse_mm,estimate_mean_g\n";
  for (const auto& r : suite.rows) {
    out << r.exp_id << ',' << num(r.k_a) << ',' << (r.compensation ? 1 : 0) << ','
        << (r.completed ? 1 : 0) << ',' << num(r.sag_sim_mm) << ',' << num(r.sag_eq_mm)
        << ',' << num(r.rmse_mm) << ',' << num(r.estimate_mean_g) << "\n";
  }
}

std::string format_suite_table(const SuiteReport& suite) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "%-4s %-7s %-5s %-10s %-12s %-12s %-10s %-10s\n", "exp",
                "k[N/m]", "comp", "verdict", "sag_sim[mm]", "sag_pred[mm]", "rmse[mm]",
                "est[g]");
  os << line;
  for (const auto& r : suite.rows) {
    std::snprintf(line, sizeof(line), "%-4d %-7.0f %-5s %-10s %-12.3f %-12.3f %-10.3f %-10.1f\n",
                  r.exp_id, r.k_a, r.compensation ? "yes" : "no",
                  r.completed ? "success" : "fail", r.sag_sim_mm, r.sag_eq_mm, r.rmse_mm,
                  r.estimate_mean_g);
    os << line;
    if (!r.note.empty()) os << "     note: " << r.note << "\n";
  }
  for (const auto& m : suite.check_messages) os << m << "\n";
  return os.str();
}

}  // namespace admitsim
