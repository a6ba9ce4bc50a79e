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
#include "mcia/network.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "mcia/errors.hpp"

namespace mcia {
namespace {

int wrap(int k, int K) { return ((k % K) + K) % K; }

int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw Error(ErrorKind::InvalidConfig, "key '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(Topology t) {
  switch (t) {
    case Topology::FullConnected: return "full_connected";
    case Topology::CyclicTwoSide: return "cyclic_two_side";
    case Topology::CyclicOneSideEdge: return "cyclic_one_side_edge";
  }
  return "unknown";
}

Topology topology_from_string(const std::string& s) {
  if (s == "full_connected" || s == "model1") return Topology::FullConnected;
  if (s == "cyclic_two_side" || s == "model2") return Topology::CyclicTwoSide;
  if (s == "cyclic_one_side_edge" || s == "model3") return Topology::CyclicOneSideEdge;
  throw Error(ErrorKind::InvalidConfig, "unknown topology '" + s + "'");
}

bool NetworkConfig::is_edge(int m) const {
  return topology == Topology::CyclicOneSideEdge && m >= M_star;
}

int NetworkConfig::rx_antennas(int m) const {
  if (topology != Topology::CyclicOneSideEdge) return N_r;
  return is_edge(m) ? N_r_edge : N_r_star;
}

std::vector<int> NetworkConfig::interferers(int k, int m) const {
  std::vector<int> out;
  switch (topology) {
    case Topology::FullConnected:
      for (int j = 0; j < K; ++j) {
        if (j != k) out.push_back(j);
      }
      break;
    case Topology::CyclicTwoSide:
      out = {wrap(k - 1, K), wrap(k + 1, K)};
      break;
    case Topology::CyclicOneSideEdge:
      if (is_edge(m) && K > 1) out = {wrap(k + 1, K)};
      break;
  }
  return out;
}

std::vector<UserId> NetworkConfig::victims(int j) const {
  std::vector<UserId> out;
  for (int k = 0; k < K; ++k) {
    if (k == j) continue;
    for (int m = 0; m < M; ++m) {
      const auto I = interferers(k, m);
      if (std::find(I.begin(), I.end(), j) != I.end()) out.push_back({k, m});
    }
  }
  return out;
}

bool NetworkConfig::has_link(int tx, int k, int m) const {
  if (tx < 0 || tx >= K || k < 0 || k >= K || m < 0 || m >= M) return false;
  if (tx == k) return true;
  const auto I = interferers(k, m);
  return std::find(I.begin(), I.end(), tx) != I.end();
}

std::vector<std::string> validate_config(const NetworkConfig& c) {
  std::vector<std::string> v;
  switch (c.topology) {
    case Topology::FullConnected:
      if (c.K < 1) v.push_back("K ≥ 1 required for full_connected (K=1 is the single-cell case)");
      break;
    case Topology::CyclicTwoSide:
      if (c.K < 3) v.push_back("K ≥ 3 required for cyclic_two_side (two distinct neighbors)");
      break;
    case Topology::CyclicOneSideEdge:
      if (c.K < 2) v.push_back("K ≥ 2 required for cyclic_one_side_edge");
      if (c.M_star < 0 || c.M_edge < 0) v.push_back("M_star ≥ 0 and M_edge ≥ 0 required");
      if (c.M_star + c.M_edge != c.M) v.push_back("M_star+M_edge=M required");
      break;
  }
  if (c.M < 1) v.push_back("M ≥ 1 required");
  if (c.d < 1) v.push_back("d ≥ 1 required");
  if (c.N_t < 1) v.push_back("N_t ≥ 1 required");
  if (c.topology == Topology::CyclicOneSideEdge) {
    if (c.M_star > 0) {
      if (c.N_r_star < 1) v.push_back("N_r_star ≥ 1 required");
      else if (c.d > c.N_r_star) v.push_back("d ≤ N_r_star required");
    }
    if (c.M_edge > 0) {
      if (c.N_r_edge < 1) v.push_back("N_r_edge ≥ 1 required");
      else if (c.d > c.N_r_edge) v.push_back("d ≤ N_r_edge required");
    }
  } else {
    if (c.N_r < 1) v.push_back("N_r ≥ 1 required");
    else if (c.d > c.N_r) v.push_back("d ≤ N_r required");
  }
  return v;
}

nlohmann::json config_to_json(const NetworkConfig& c) {
  nlohmann::json j;
  j["topology"] = to_string(c.topology);
  j["K"] = c.K;
  j["M"] = c.M;
  j["d"] = c.d;
  j["N_t"] = c.N_t;
  if (c.topology == Topology::CyclicOneSideEdge) {
    j["M_star"] = c.M_star;
    j["M_edge"] = c.M_edge;
    j["N_r_star"] = c.N_r_star;
    j["N_r_edge"] = c.N_r_edge;
  } else {
    j["N_r"] = c.N_r;
  }
  return j;
}

NetworkConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
  NetworkConfig c;
  try {
    c.topology = topology_from_string(j.at("topology").get<std::string>());
    c.K = j.at("K").get<int>();
    c.d = j.at("d").get<int>();
    c.N_t = j.at("N_t").get<int>();
    if (c.topology == Topology::CyclicOneSideEdge) {
      c.M_star = j.at("M_star").get<int>();
      c.M_edge = j.at("M_edge").get<int>();
      c.M = j.value("M", c.M_star + c.M_edge);
      c.N_r_star = j.at("N_r_star").get<int>();
      c.N_r_edge = j.at("N_r_edge").get<int>();
    } else {
      c.M = j.at("M").get<int>();
      c.N_r = j.at("N_r").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, e.what());
  }
  return c;
}

void apply_kv(NetworkConfig& c, const std::string& key, const std::string& value) {
  if (key == "topology") {
    c.topology = topology_from_string(value);
    return;
  }
  const int v = parse_int(key, value);
  if (key == "K") c.K = v;
  else if (key == "M") c.M = v;
  else if (key == "M_star") c.M_star = v;
  else if (key == "M_edge") c.M_edge = v;
  else if (key == "d") c.d = v;
  else if (key == "N_t") c.N_t = v;
  else if (key == "N_r") c.N_r = v;
  else if (key == "N_r_star") c.N_r_star = v;
  else if (key == "N_r_edge") c.N_r_edge = v;
  else throw Error(ErrorKind::InvalidConfig, "unknown key '" + key + "'");
}

std::string config_to_kv(const NetworkConfig& c) {
  std::ostringstream os;
  os << "topology=" << to_string(c.topology) << '\n'
     << "K=" << c.K << '\n'
     << "M=" << c.M << '\n'
     << "M_star=" << c.M_star << '\n'
     << "M_edge=" << c.M_edge << '\n'
     << "d=" << c.d << '\n'
     << "N_t=" << c.N_t << '\n'
     << "N_r=" << c.N_r << '\n'
     << "N_r_star=" << c.N_r_star << '\n'
     << "N_r_edge=" << c.N_r_edge << '\n';
  return os.str();
}

NetworkConfig config_from_kv(const std::string& text) {
  NetworkConfig c;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidConfig, "missing '=' in '" + line + "'");
    apply_kv(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

ChannelSet::ChannelSet(NetworkConfig cfg, std::uint64_t seed, std::map<LinkKey, CMatrix> links)
    : cfg_(cfg), seed_(seed), links_(std::move(links)) {}

bool ChannelSet::has(int tx, int cell, int user) const {
  return links_.count(LinkKey{tx, cell, user}) > 0;
}

const CMatrix& ChannelSet::h(int tx, int cell, int user) const {
  const auto it = links_.find(LinkKey{tx, cell, user});
  if (it == links_.end()) {
    throw Error(ErrorKind::DimensionMismatch, "no link from BS " + std::to_string(tx) + " to user (" +
                                                  std::to_string(cell) + "," + std::to_string(user) + ")");
  }
  return it->second;
}

ChannelSet generate_channels(const NetworkConfig& cfg, std::uint64_t seed) {
  const auto violations = validate_config(cfg);
  if (!violations.empty()) throw Error(ErrorKind::InvalidConfig, violations.front());
  std::map<LinkKey, CMatrix> links;
  for (int k = 0; k < cfg.K; ++k) {
    for (int m = 0; m < cfg.M; ++m) {
      std::vector<int> tx = cfg.interferers(k, m);
      tx.push_back(k);
      for (int j : tx) {
        GaussianSource src(derive_seed(seed, {j, k, m}));
        links.emplace(LinkKey{j, k, m}, random_gaussian(cfg.rx_antennas(m), cfg.N_t, src));
      }
    }
  }
  return ChannelSet(cfg, seed, std::move(links));
}

}  // namespace mcia
