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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <json.hpp>

using namespace mcia;
using namespace mcia::testing;

TEST_CASE("validate_config examples") {
  CHECK(validate_config(uniform_cfg(Topology::FullConnected, 3, 3, 1, 3, 7)).empty());

  const auto two = validate_config(uniform_cfg(Topology::CyclicTwoSide, 2, 3, 2, 6, 14));
  REQUIRE(two.size() == 1);
  CHECK(two[0].find("K ≥ 3") != std::string::npos);

  NetworkConfig bad = edge_cfg(6, 3, 2, 2, 10, 2, 12);
  bad.M = 4;
  const auto one = validate_config(bad);
  REQUIRE(one.size() == 1);
  CHECK(one[0].find("M_star+M_edge=M") != std::string::npos);
}

TEST_CASE("validate_config catches stream and antenna counts") {
  CHECK(!validate_config(uniform_cfg(Topology::FullConnected, 3, 1, 3, 3, 2)).empty());
  CHECK(!validate_config(uniform_cfg(Topology::FullConnected, 3, 0, 1, 3, 2)).empty());
  CHECK(!validate_config(edge_cfg(3, 1, 1, 2, 4, 2, 1)).empty());
  CHECK(validate_config(edge_cfg(3, 2, 0, 1, 2, 1, 0)).empty());
  CHECK(error_kind_of([] { generate_channels(uniform_cfg(Topology::CyclicTwoSide, 2, 1, 1, 1, 1), 1); }) ==
        ErrorKind::InvalidConfig);
}

TEST_CASE("cyclic two-side network has exactly the adjacent links") {
  const NetworkConfig c = uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 6, 14);
  const ChannelSet ch = generate_channels(c, 42);
  CHECK(ch.links().size() == 54);
  for (int j = 0; j < 6; ++j) {
    for (int k = 0; k < 6; ++k) {
      for (int m = 0; m < 3; ++m) {
        CHECK(ch.has(j, k, m) == link_oracle(c, j, k, m));
        if (!ch.has(j, k, m)) CHECK(error_kind_of([&] { ch.h(j, k, m); }) == ErrorKind::DimensionMismatch);
      }
    }
  }
}

TEST_CASE("link pattern matches the received-signal decomposition of each model") {
  // Serving BS plus interfering BSs per receiver.
  const NetworkConfig m1 = uniform_cfg(Topology::FullConnected, 4, 2, 1, 2, 7);
  const NetworkConfig m2 = uniform_cfg(Topology::CyclicTwoSide, 5, 2, 1, 2, 5);
  const NetworkConfig m3 = edge_cfg(4, 2, 1, 1, 3, 1, 4);
  for (const auto* c : {&m1, &m2, &m3}) {
    const ChannelSet ch = generate_channels(*c, 3);
    for (int k = 0; k < c->K; ++k) {
      for (int m = 0; m < c->M; ++m) {
        int heard = 0;
        for (int j = 0; j < c->K; ++j) heard += ch.has(j, k, m) ? 1 : 0;
        int expected = c->K;
        if (c->topology == Topology::CyclicTwoSide) expected = 3;
        if (c->topology == Topology::CyclicOneSideEdge) expected = c->is_edge(m) ? 2 : 1;
        CHECK(heard == expected);
        CHECK(static_cast<int>(c->interferers(k, m).size()) == expected - 1);
        CHECK(ch.h(k, k, m).rows() == c->rx_antennas(m));
        CHECK(ch.h(k, k, m).cols() == c->N_t);
      }
      for (const UserId& v : c->victims(k)) CHECK(link_oracle(*c, k, v.cell, v.user));
    }
  }
  // Edge users of cell k hear cell k+1.
  CHECK(m3.interferers(0, 2) == std::vector<int>{1});
  CHECK(m3.interferers(3, 2) == std::vector<int>{0});
  CHECK(m3.interferers(0, 0).empty());
}

TEST_CASE("channel generation is deterministic and per-link seeded") {
  const NetworkConfig c = uniform_cfg(Topology::FullConnected, 3, 2, 1, 4, 5);
  const ChannelSet a = generate_channels(c, 99);
  const ChannelSet b = generate_channels(c, 99);
  for (const auto& [key, h] : a.links()) CHECK((h - b.links().at(key)).norm() == 0.0);
  const ChannelSet other = generate_channels(c, 100);
  CHECK((a.h(0, 1, 0) - other.h(0, 1, 0)).norm() > 0.0);

  NetworkConfig more = c;
  more.M = 3;
  const ChannelSet grown = generate_channels(more, 99);
  for (const auto& [key, h] : a.links()) CHECK((h - grown.links().at(key)).norm() == 0.0);
}

TEST_CASE("channel entries follow CN(0,1)") {
  const NetworkConfig c = uniform_cfg(Topology::FullConnected, 5, 4, 1, 50, 50);
  const ChannelSet ch = generate_channels(c, 2026);
  double abs_sum = 0.0, re_sum = 0.0, re_sq = 0.0, im_sq = 0.0;
  long n = 0;
  for (const auto& [key, h] : ch.links()) {
    for (Eigen::Index i = 0; i < h.size(); ++i) {
      const cplx z = h.data()[i];
      abs_sum += std::abs(z);
      re_sum += z.real();
      re_sq += z.real() * z.real();
      im_sq += z.imag() * z.imag();
      ++n;
    }
  }
  REQUIRE(n == 5 * 5 * 4 * 2500);
  const double mean_abs = abs_sum / n;
  const double re_mean = re_sum / n;
  const double re_var = re_sq / n - re_mean * re_mean;
  // E|z| = sqrt(pi)/2 for unit-variance circular Gaussian.
  CHECK(std::abs(mean_abs - std::sqrt(M_PI) / 2.0) < 0.01);
  CHECK(re_var >= 0.45);
  CHECK(re_var <= 0.55);
  CHECK(std::abs(im_sq / n - 0.5) < 0.01);
}

TEST_CASE("config JSON and key=value round trips") {
  const std::vector<NetworkConfig> cfgs = {
      uniform_cfg(Topology::FullConnected, 3, 3, 1, 3, 7),
      uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 12, 8),
      edge_cfg(6, 3, 2, 2, 14, 2, 2),
  };
  for (const auto& c : cfgs) {
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK(config_from_json(nlohmann::json::parse(config_to_json(c).dump())) == c);
    CHECK(config_from_kv(config_to_kv(c)) == c);
  }
  const NetworkConfig parsed = config_from_kv("topology=model2\nK=6\nM=3\nd=2\nN_t=6\nN_r=14\n");
  CHECK(parsed.topology == Topology::CyclicTwoSide);
  CHECK(parsed.N_r == 14);
  CHECK(error_kind_of([] { topology_from_string("ring"); }) == ErrorKind::InvalidConfig);
  CHECK(error_kind_of([] { config_from_kv("K=three\n"); }) == ErrorKind::InvalidConfig);
}
