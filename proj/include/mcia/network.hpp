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
#include <map>
#include <json.hpp>
#include <string>
#include <vector>

#include "mcia/linalg.hpp"

namespace mcia {

enum class Topology { FullConnected, CyclicTwoSide, CyclicOneSideEdge };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);  // throws InvalidConfig

/// Identifies user m of cell k. Cells and users are 0-based internally.
struct UserId {
  int cell = 0;
  int user = 0;
  auto operator<=>(const UserId&) const = default;
};

struct NetworkConfig {
  Topology topology = Topology::FullConnected;
  int K = 2;
  int M = 1;
  int M_star = 0;  // CyclicOneSideEdge only
  int M_edge = 0;  // CyclicOneSideEdge only
  int d = 1;
  int N_t = 1;
  int N_r = 1;         // uniform models
  int N_r_star = 0;    // CyclicOneSideEdge only
  int N_r_edge = 0;    // CyclicOneSideEdge only

  bool operator==(const NetworkConfig&) const = default;

  /// Edge users of a cell are indexed after its interior users.
  bool is_edge(int m) const;
  int rx_antennas(int m) const;

  /// Cells whose BS reaches user (k, m), excluding the serving cell k.
  std::vector<int> interferers(int k, int m) const;

  /// Users outside cell j reached by BS j.
  std::vector<UserId> victims(int j) const;

  bool has_link(int tx, int k, int m) const;
  int total_streams() const { return K * M * d; }
};

/// One violation string per broken invariant; empty when valid.
std::vector<std::string> validate_config(const NetworkConfig& cfg);

nlohmann::json config_to_json(const NetworkConfig& cfg);
NetworkConfig config_from_json(const nlohmann::json& j);  // throws InvalidConfig

/// Plain-text "key=value" lines.
std::string config_to_kv(const NetworkConfig& cfg);
NetworkConfig config_from_kv(const std::string& text);  // throws InvalidConfig

/// Applies one "key=value" assignment.
void apply_kv(NetworkConfig& cfg, const std::string& key, const std::string& value);

struct LinkKey {
  int tx = 0;
  int cell = 0;
  int user = 0;
  auto operator<=>(const LinkKey&) const = default;
};

class ChannelSet {
 public:
  ChannelSet(NetworkConfig cfg, std::uint64_t seed, std::map<LinkKey, CMatrix> links);

  const NetworkConfig& config() const { return cfg_; }
  std::uint64_t seed() const { return seed_; }
  const std::map<LinkKey, CMatrix>& links() const { return links_; }

  bool has(int tx, int cell, int user) const;
  /// H_tx^{cell:user}; throws DimensionMismatch for an absent link.
  const CMatrix& h(int tx, int cell, int user) const;

 private:
  NetworkConfig cfg_;
  std::uint64_t seed_;
  std::map<LinkKey, CMatrix> links_;
};

ChannelSet generate_channels(const NetworkConfig& cfg, std::uint64_t seed);

}  // namespace mcia
