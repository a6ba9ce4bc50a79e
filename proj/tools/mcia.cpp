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
// Command-line front end: run scenarios, print resource tables, check antenna feasibility.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mcia/errors.hpp"
#include "mcia/scenario.hpp"

namespace {

int fail(const std::string& kind, const std::string& detail) {
  std::string one_line = detail;
  for (char& c : one_line) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::cerr << "error: " << kind << ": " << one_line << '\n';
  return 2;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mcia::Error(mcia::ErrorKind::InvalidScenario, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcia: closed-form interference alignment designs for multi-cell downlink networks"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string out_path;
  std::string csv_path;
  auto* run = app.add_subcommand("run", "run a scenario and write the results JSON");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--seed", seed, "override the scenario seed");
  run->add_option("--trials", trials, "override the trial count");
  run->add_option("--out", out_path, "override the output path");
  run->add_option("--csv", csv_path, "also write the rate curve as CSV");

  std::string topology;
  std::vector<std::string> dims;
  auto* tables = app.add_subcommand("tables", "print antenna, CSI and complexity rows");
  tables->add_option("--topology", topology, "full_connected | cyclic_two_side | cyclic_one_side_edge")->required();
  tables->add_option("dims", dims, "key=value assignments, e.g. K=6 M=3 d=2");

  std::string check_path;
  auto* check = app.add_subcommand("check", "check step-level antenna inequalities of a scenario");
  check->add_option("scenario", check_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run) {
      mcia::Scenario s = mcia::load_scenario(scenario_path);
      if (seed) s.seed = *seed;
      if (trials) s.trials = *trials;
      if (!out_path.empty()) s.output_path = out_path;
      const auto results = mcia::run_scenario(s, mcia::workers_from_env());
      const std::string text = results.dump(2) + "\n";
      if (s.output_path.empty()) std::cout << text;
      else write_file(s.output_path, text);
      if (!csv_path.empty()) {
        mcia::RateCurve curve;
        const auto& snr = results.at("snr_db");
        const auto& rate = results.at("sum_rate_bits");
        for (std::size_t i = 0; i < snr.size(); ++i) curve.points.push_back({snr[i].get<double>(), rate[i].get<double>()});
        write_file(csv_path, mcia::to_csv(curve));
      }
      std::cerr << s.name << ": dof_slope=" << results.at("dof_slope").get<double>()
                << " max_residual=" << results.at("max_normalized_residual").get<double>() << '\n';
    } else if (*tables) {
      mcia::NetworkConfig cfg;
      cfg.topology = mcia::topology_from_string(topology);
      cfg.K = 3;
      cfg.N_t = 0;
      cfg.N_r = 0;
      for (const auto& kv : dims) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) return fail("InvalidConfig", "expected key=value, got '" + kv + "'");
        mcia::apply_kv(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      std::cout << mcia::print_tables(cfg.topology, cfg);
    } else if (*check) {
      const mcia::Scenario s = mcia::load_scenario(check_path);
      const std::string text = mcia::check_feasibility(s.config, s.approach);
      std::cout << text;
      return text.find("verdict: FEASIBLE") != std::string::npos ? 0 : 1;
    }
  } catch (const mcia::Error& e) {
    return fail(std::string(mcia::to_string(e.kind())), e.detail());
  } catch (const std::exception& e) {
    return fail("Internal", e.what());
  }
  return 0;
}
