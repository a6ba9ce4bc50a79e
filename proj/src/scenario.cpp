// SPDX-License-Identifier: Apache-2.0
//
// mcia - closed-form interference alignment for multi-cell downlink networks
// Copyright (C) 2026 The mcia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "mcia/scenario.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "mcia/errors.hpp"

namespace mcia {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidScenario, what); }

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("scenario must be a JSON object");
  Scenario s;
  try {
    s.name = j.at("name").get<std::string>();
    s.config = config_from_json(j.at("config"));
    const auto& d = j.at("design");
    s.family = d.at("family").get<std::string>();
    if (d.contains("approach")) s.approach = approach_from_string(d.at("approach").get<std::string>());
    else if (d.contains("option")) s.approach = approach_from_string(d.at("option").get<std::string>());
    else bad("design needs an 'approach' or 'option' field");
    s.snr_grid_db = j.value("snr_grid_db", default_snr_grid());
    if (j.contains("slope_window_db")) {
      const auto w = j.at("slope_window_db").get<std::vector<double>>();
      if (w.size() != 2) bad("slope_window_db must hold two numbers");
      s.slope_window_db = {w[0], w[1]};
    }
    s.trials = j.at("trials").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("codebook_size") && !j.at("codebook_size").is_null()) {
      s.codebook_size = j.at("codebook_size").get<int>();
    }
    s.output_path = j.value("output_path", std::string());
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  return s;
}

nlohmann::json scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["config"] = config_to_json(s.config);
  j["design"] = {{"family", s.family}, {is_model2_option(s.approach) ? "option" : "approach", to_string(s.approach)}};
  j["snr_grid_db"] = s.snr_grid_db;
  j["slope_window_db"] = {s.slope_window_db.first, s.slope_window_db.second};
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  if (s.codebook_size) j["codebook_size"] = *s.codebook_size;
  j["output_path"] = s.output_path;
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

void validate_scenario(const Scenario& s) {
  const auto v = validate_config(s.config);
  if (!v.empty()) throw Error(ErrorKind::InvalidConfig, v.front());
  if (s.family != "basic" && s.family != "advanced") bad("design family must be 'basic' or 'advanced'");
  if ((s.family == "basic") != is_basic(s.approach)) {
    bad("approach " + to_string(s.approach) + " does not belong to family '" + s.family + "'");
  }
  if (!approach_valid(s.config.topology, s.approach)) {
    throw Error(ErrorKind::UnknownApproach, "approach " + to_string(s.approach) + " is not defined for topology " +
                                                to_string(s.config.topology));
  }
  const bool needs_book = s.approach == Approach::AdvD;
  if (needs_book && (!s.codebook_size || *s.codebook_size < 1)) bad("option d needs codebook_size ≥ 1");
  if (!needs_book && s.codebook_size) bad("codebook_size is only valid for advanced option d");
  if (s.trials < 1) bad("trials must be ≥ 1");
  if (s.snr_grid_db.size() < 2) bad("snr_grid_db needs at least two points");
  for (std::size_t i = 1; i < s.snr_grid_db.size(); ++i) {
    if (!(s.snr_grid_db[i] > s.snr_grid_db[i - 1])) bad("snr_grid_db must be strictly increasing");
  }
  if (!(s.slope_window_db.first < s.slope_window_db.second)) bad("slope_window_db must satisfy lo < hi");
}

nlohmann::json run_scenario(const Scenario& s, int workers) {
  validate_scenario(s);
  const auto start = std::chrono::steady_clock::now();
  SweepOptions opts;
  opts.slope_window_db = s.slope_window_db;
  opts.workers = workers;
  const DesignSpec spec{s.approach, s.codebook_size.value_or(0)};
  const SweepResult r = run_sweep(s.config, spec, s.snr_grid_db, s.trials, s.seed, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json out;
  out["schema_version"] = kResultsSchema;
  out["scenario"] = scenario_to_json(s);
  const auto curve = to_json(r.curve);
  out["snr_db"] = curve["snr_db"];
  out["sum_rate_bits"] = curve["sum_rate_bits"];
  out["dof_slope"] = r.curve.dof_slope;
  out["slope_window_db"] = curve["slope_window_db"];
  out["max_normalized_residual"] = r.max_normalized_residual;
  out["mean_normalized_residual"] = r.mean_normalized_residual;
  out["max_residual_outside_boundary"] = r.max_residual_outside_boundary;
  out["mean_total_leakage"] = r.mean_total_leakage;
  nlohmann::json cells = nlohmann::json::array();
  for (int c : r.boundary_cells) cells.push_back(c + 1);
  out["boundary_cells"] = cells;
  out["wall_clock_seconds"] = secs;
  return out;
}

std::string stable_payload(const nlohmann::json& results) {
  nlohmann::json j = results;
  j.erase("wall_clock_seconds");
  return j.dump(2);
}

std::string check_feasibility(const NetworkConfig& cfg, Approach approach) {
  std::ostringstream os;
  bool ok = true;
  for (const auto& q : step_conditions(cfg, approach)) {
    os << (q.holds() ? "PASS " : "FAIL ") << q.describe() << '\n';
    ok = ok && q.holds();
  }
  os << "verdict: " << (ok ? "FEASIBLE" : "INFEASIBLE") << " (" << to_string(cfg.topology) << ", approach "
     << to_string(approach) << ")\n";
  return os.str();
}

std::string antenna_line(Approach a, const MinAntennas& m) {
  std::ostringstream os;
  os << to_string(a) << ": BS " << m.bs_expr << "=" << m.bs << ", MS " << m.ms_expr << "=";
  if (m.ms_edge) os << "(" << m.ms << "," << *m.ms_edge << ")";
  else os << m.ms;
  return os.str();
}

std::string print_tables(Topology t, const NetworkConfig& cfg) {
  NetworkConfig c = cfg;
  c.topology = t;
  if (t == Topology::CyclicOneSideEdge && c.M_star + c.M_edge != c.M) c.M_star = c.M - c.M_edge;
  if (c.K < 1 || c.M < 1 || c.d < 1) throw Error(ErrorKind::InvalidConfig, "K, M and d must be ≥ 1");
  std::ostringstream os;
  os << "topology " << to_string(t) << "  K=" << c.K << " M=" << c.M;
  if (t == Topology::CyclicOneSideEdge) os << " M*=" << c.M_star << " M°=" << c.M_edge;
  os << " d=" << c.d << " N_t=" << c.N_t;
  if (t == Topology::CyclicOneSideEdge) os << " N_r*=" << c.N_r_star << " N_r°=" << c.N_r_edge << '\n';
  else os << " N_r=" << c.N_r << '\n';
  for (Approach a : approaches_for(t)) {
    const ResourceRow r = resource_report(t, a, c);
    os << antenna_line(a, r.antennas) << '\n';
    if (!r.antennas.note.empty()) os << "  note: " << r.antennas.note << '\n';
    for (const auto& e : r.csi_entries) {
      os << "  csi " << e.side << ": " << e.source << " | " << e.content << " | " << e.quantity_expr << "="
         << join(e.quantity) << '\n';
    }
    for (const auto& e : r.complexity_entries) {
      os << "  complexity " << e.side << ": " << e.target << " | " << e.operation << " | " << e.scale_expr << "="
         << join(e.scale) << '\n';
    }
    for (const auto& f : r.inconsistencies) os << "  inconsistent: " << f << '\n';
  }
  return os.str();
}

}  // namespace mcia
