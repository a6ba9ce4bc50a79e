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
#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcia/experiment.hpp"

namespace mcia {

inline constexpr const char* kResultsSchema = "mcia-results/1";

struct Scenario {
  std::string name;
  NetworkConfig config;
  std::string family;  // "basic" or "advanced"
  Approach approach = Approach::A;
  std::vector<double> snr_grid_db;
  std::pair<double, double> slope_window_db{40.0, 60.0};
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<int> codebook_size;
  std::string output_path;
};

/// Parses without validating. Throws InvalidScenario on malformed documents.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

/// Throws InvalidScenario, InvalidConfig or UnknownApproach.
void validate_scenario(const Scenario& s);

/// Results document; "wall_clock_seconds" is the only nondeterministic field.
nlohmann::json run_scenario(const Scenario& s, int workers = 1);

/// Serialized results with the timing field removed, for determinism checks.
std::string stable_payload(const nlohmann::json& results);

/// One "PASS"/"FAIL" line per step-level inequality, then a verdict line.
std::string check_feasibility(const NetworkConfig& cfg, Approach approach);

/// Antenna, CSI and complexity rows of every approach, symbolic and evaluated.
std::string print_tables(Topology t, const NetworkConfig& cfg);

/// "A: BS Md=3, MS (K-1)Md+d=7" style summary line.
std::string antenna_line(Approach a, const MinAntennas& m);

}  // namespace mcia
