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

using namespace mcia;
using namespace mcia::testing;

namespace {

const Approach kBasic[] = {Approach::A, Approach::B, Approach::C, Approach::D, Approach::E};

struct Designed {
  ChannelSet ch;
  CoderSet cs;
};

Designed design(const NetworkConfig& c, Approach a, std::uint64_t seed) {
  ChannelSet ch = generate_channels(c, seed);
  CoderSet cs = design_basic(ch, a, seed ^ 0x5eedULL);
  return {std::move(ch), std::move(cs)};
}

void check_contract(const Designed& d, double tol = 1e-8) {
  const BruteLeakage b = brute_leakage(d.ch, d.cs);
  CHECK(b.max_residual <= tol);
  CHECK(b.min_desired_sv >= 1e-4);
}

void check_normalization(const CoderSet& cs) {
  for (const auto& [id, u] : cs.receive_filters) {
    CHECK((u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols())).norm() < 1e-10);
  }
  for (const auto& [id, v] : cs.precoders) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) CHECK(std::abs(v.col(j).norm() - 1.0) < 1e-12);
  }
}

// Rows U_{j:m}^H H_k^{j:m} over every user that cell k interferes with.
CMatrix victim_stack(const Designed& d, int k) {
  std::vector<CMatrix> rows;
  for (const UserId& v : d.ch.config().victims(k)) rows.push_back(d.cs.u(v.cell, v.user).adjoint() * d.ch.h(k, v.cell, v.user));
  return vstack(rows, d.ch.config().N_t);
}

// Columns H_j^{k:m} V_{j:n} over every interfering cell j and stream block n.
CMatrix interference_columns(const Designed& d, int k, int m) {
  const auto& c = d.ch.config();
  std::vector<CMatrix> cols;
  for (int j : c.interferers(k, m)) {
    for (int n = 0; n < c.M; ++n) cols.push_back(d.ch.h(j, k, m) * d.cs.v(j, n));
  }
  return hstack(cols, c.rx_antennas(m));
}

const NetworkConfig kM1 = uniform_cfg(Topology::FullConnected, 3, 2, 1, 0, 0);
const NetworkConfig kM2 = uniform_cfg(Topology::CyclicTwoSide, 4, 2, 1, 0, 0);
const NetworkConfig kM3 = edge_cfg(3, 1, 1, 1, 0, 0, 0);

}  // namespace

TEST_CASE("every basic approach zero-forces at its table minimum") {
  for (const NetworkConfig* base : {&kM1, &kM2, &kM3}) {
    for (Approach a : kBasic) {
      const NetworkConfig c = at_minimum(*base, a);
      CAPTURE(config_to_kv(c));
      CAPTURE(to_string(a));
      for (std::uint64_t s = 1; s <= 10; ++s) {
        const Designed d = design(c, a, s);
        check_contract(d);
        check_normalization(d.cs);
        const LeakageReport rep = leakage_report(d.ch, d.cs);
        CHECK(rep.max_normalized_residual() <= 1e-8);
      }
    }
  }
}

TEST_CASE("model 1 approach A example") {
  const Designed d = design(uniform_cfg(Topology::FullConnected, 3, 3, 1, 3, 7), Approach::A, 1);
  check_contract(d);
  REQUIRE(d.cs.intermediates.phi.size() == 3);
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) {
      // V_{k:m} is the unit-column normalization of Phi_k Vtilde_{k:m}.
      CMatrix casc = d.cs.intermediates.phi.at(k) * d.cs.intermediates.v_tilde.at({k, m});
      for (Eigen::Index j = 0; j < casc.cols(); ++j) casc.col(j).normalize();
      CHECK((casc - d.cs.v(k, m)).norm() < 1e-8);
    }
  }
}

TEST_CASE("single cell reduces to plain zero-forcing") {
  const Designed d = design(uniform_cfg(Topology::FullConnected, 1, 2, 1, 2, 2), Approach::A, 3);
  check_contract(d, 1e-10);
  CHECK(d.ch.links().size() == 2);
}

TEST_CASE("model 1 approach D aligns every cell's filters onto one reference") {
  const NetworkConfig c = uniform_cfg(Topology::FullConnected, 3, 2, 1, 4, 5);
  CHECK(min_antennas(c.topology, Approach::D, c).ms == 5);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const Designed d = design(c, Approach::D, s);
    check_contract(d);
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 3; ++j) {
        if (j == k) continue;
        const CMatrix omega = d.cs.intermediates.omega.at({j, k}).adjoint();
        for (int m = 0; m < 2; ++m) {
          const CMatrix eff = (d.cs.u(k, m).adjoint() * d.ch.h(j, k, m)).adjoint();
          CHECK(chordal_oracle(eff, omega) <= 1e-6);
          CHECK(chordal_oracle(eff, (d.cs.u(k, 0).adjoint() * d.ch.h(j, k, 0)).adjoint()) <= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("infeasible antennas are reported with the violated bound") {
  const NetworkConfig c = uniform_cfg(Topology::FullConnected, 3, 3, 1, 2, 7);
  const ChannelSet ch = generate_channels(c, 1);
  try {
    design_full_connected(ch, Approach::A, 1);
    FAIL("expected InfeasibleAntennas");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleAntennas);
    CHECK(e.detail().find("N_t ≥ Md") != std::string::npos);
  }
}

TEST_CASE("approach A leaves Phi-orthogonal interference of rank at most N_t - Md") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const NetworkConfig c = uniform_cfg(Topology::FullConnected, 3, 2, 1, 3, 5);
    const Designed d = design(c, Approach::A, s);
    check_contract(d);
    for (int k = 0; k < 3; ++k) {
      const CMatrix st = victim_stack(d, k);
      CHECK(st.rows() == 4);
      CHECK(numerical_rank(st) <= c.N_t - c.M * c.d);
      CHECK((st * d.cs.intermediates.phi.at(k)).norm() <= 1e-8 * std::max(1.0, st.norm()));
    }
  }
}

TEST_CASE("approach B interference columns have rank at most N_r - Md") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    NetworkConfig c = at_minimum(uniform_cfg(Topology::FullConnected, 3, 2, 1, 0, 0), Approach::B);
    c.N_r += 1;
    const Designed d = design(c, Approach::B, s);
    for (int k = 0; k < 3; ++k) {
      for (int m = 0; m < 2; ++m) {
        const CMatrix cols = interference_columns(d, k, m);
        CHECK(cols.cols() == 4);
        CHECK(numerical_rank(cols) <= c.N_r - c.M * c.d);
        // U_{k:m} is Psi_{k:m} Utilde_{k:m} up to orthonormalization.
        const CMatrix casc = d.cs.intermediates.psi.at({k, m}) * d.cs.intermediates.u_tilde.at({k, m});
        CHECK(chordal_oracle(casc, d.cs.u(k, m)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("approach C filters invert every interfering channel") {
  const NetworkConfig c = at_minimum(uniform_cfg(Topology::FullConnected, 3, 2, 1, 0, 0), Approach::C);
  const Designed d = design(c, Approach::C, 5);
  check_contract(d);
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 2; ++m) {
      for (int j : c.interferers(k, m)) {
        const CMatrix gh = d.cs.intermediates.g.at({k, m}) * d.ch.h(j, k, m);
        CHECK((gh - CMatrix::Identity(c.N_t, c.N_t)).norm() <= 1e-8);
      }
    }
  }
}

TEST_CASE("approach E interference equals the transmit reference") {
  const NetworkConfig even6 = uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 38, 12);
  const NetworkConfig odd5 = at_minimum(uniform_cfg(Topology::CyclicTwoSide, 5, 2, 1, 0, 0), Approach::E);
  for (const NetworkConfig& c : {at_minimum(kM1, Approach::E), at_minimum(kM2, Approach::E), even6, odd5}) {
    CAPTURE(config_to_kv(c));
    const Designed d = design(c, Approach::E, 8);
    check_contract(d);
    for (int k = 0; k < c.K; ++k) {
      for (int m = 0; m < c.M; ++m) {
        const CMatrix& theta = d.cs.intermediates.theta.at({k, m});
        for (int j : c.interferers(k, m)) {
          const CMatrix hv = d.ch.h(j, k, m) * d.cs.intermediates.raw_precoder.at(j);
          CHECK((hv - theta).norm() <= 1e-8 * std::max(1.0, theta.norm()));
        }
      }
    }
  }
}

TEST_CASE("designs are deterministic in the seed") {
  for (Approach a : kBasic) {
    const NetworkConfig c = at_minimum(kM1, a);
    const ChannelSet ch = generate_channels(c, 4);
    const CoderSet x = design_basic(ch, a, 10);
    const CoderSet y = design_basic(ch, a, 10);
    for (const auto& [id, v] : x.precoders) CHECK((v - y.precoders.at(id)).norm() == 0.0);
    for (const auto& [id, u] : x.receive_filters) CHECK((u - y.receive_filters.at(id)).norm() == 0.0);
    const CoderSet z = design_basic(ch, a, 11);
    double diff = 0.0;
    for (const auto& [id, v] : x.precoders) diff += (v - z.precoders.at(id)).norm();
    for (const auto& [id, u] : x.receive_filters) diff += (u - z.receive_filters.at(id)).norm();
    CHECK(diff > 0.0);
  }
}

TEST_CASE("topology-specific entry points reject other topologies") {
  const ChannelSet ch = generate_channels(at_minimum(kM2, Approach::A), 1);
  CHECK(error_kind_of([&] { design_full_connected(ch, Approach::A, 1); }) == ErrorKind::InvalidConfig);
  CHECK(error_kind_of([&] { design_cyclic_one_side(ch, Approach::A, 1); }) == ErrorKind::InvalidConfig);
  CHECK_NOTHROW(design_cyclic_two_side(ch, Approach::A, 1));
  CHECK(error_kind_of([&] { design_basic(ch, Approach::AdvB, 1); }) == ErrorKind::UnknownApproach);
}

TEST_CASE("model 2 approach A example and its certificate") {
  const NetworkConfig c = uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 6, 14);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const Designed d = design(c, Approach::A, s);
    check_contract(d);
    for (int k = 0; k < 6; ++k) {
      const CMatrix st = victim_stack(d, k);
      CHECK(st.rows() == 2 * 3 * 2);
      CHECK((st * d.cs.intermediates.phi.at(k)).norm() <= 1e-8);
    }
  }
}

TEST_CASE("model 2 single-user cells only null ICI") {
  const Designed d = design(uniform_cfg(Topology::CyclicTwoSide, 3, 1, 1, 1, 3), Approach::A, 2);
  check_contract(d, 1e-10);
}

TEST_CASE("model 2 approach C example") {
  const NetworkConfig c = uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 12, 24);
  const Designed d = design(c, Approach::C, 3);
  check_contract(d);
  for (int k = 0; k < 6; ++k) {
    for (int m = 0; m < 3; ++m) {
      for (int j : {(k + 5) % 6, (k + 1) % 6}) {
        CHECK((d.cs.intermediates.g.at({k, m}) * d.ch.h(j, k, m) - CMatrix::Identity(12, 12)).norm() <= 1e-8);
      }
    }
  }
}

TEST_CASE("leakage covers only existing links") {
  const NetworkConfig c = uniform_cfg(Topology::CyclicTwoSide, 6, 3, 2, 6, 14);
  const ChannelSet ch = generate_channels(c, 9);
  // Random coders, so every existing link leaks.
  CoderSet cs;
  GaussianSource src(3);
  for (int k = 0; k < 6; ++k) {
    for (int m = 0; m < 3; ++m) {
      cs.precoders[{k, m}] = random_orthonormal(6, 2, src);
      cs.receive_filters[{k, m}] = random_orthonormal(14, 2, src);
    }
  }
  const LeakageReport rep = leakage_report(ch, cs);
  const BruteLeakage b = brute_leakage(ch, cs);
  CHECK(std::abs(rep.total_leakage() - b.total) <= 1e-10 * b.total);
  for (const auto& [id, u] : rep.per_user) CHECK(std::abs(u.normalized_residual - b.residual.at(id)) <= 1e-10 * b.residual.at(id));
  CHECK(rep.max_normalized_residual() > 1e-2);
}

TEST_CASE("model 3 approach A example") {
  const NetworkConfig c = edge_cfg(6, 3, 2, 2, 10, 2, 12);
  for (std::uint64_t s = 1; s <= 5; ++s) check_contract(design(c, Approach::A, s));
}

TEST_CASE("model 3 without edge users is per-cell zero-forcing") {
  const NetworkConfig c = edge_cfg(4, 3, 0, 1, 3, 1, 0);
  CHECK(validate_config(c).empty());
  for (Approach a : {Approach::A, Approach::C, Approach::D}) {
    const NetworkConfig m = at_minimum(c, a);
    const Designed d = design(m, a, 4);
    check_contract(d);
    for (const auto& [key, h] : d.ch.links()) CHECK(key.tx == key.cell);
  }
}

TEST_CASE("model 3 approach C inverts the neighbour channel at edge users") {
  const NetworkConfig c = at_minimum(edge_cfg(4, 2, 1, 1, 0, 0, 0), Approach::C);
  CHECK(c.N_r_edge == c.N_t);
  const Designed d = design(c, Approach::C, 6);
  check_contract(d);
  for (int k = 0; k < 4; ++k) {
    const CMatrix gh = d.cs.intermediates.g.at({k, 2}) * d.ch.h((k + 1) % 4, k, 2);
    CHECK((gh - CMatrix::Identity(c.N_t, c.N_t)).norm() <= 1e-8);
  }
}

TEST_CASE("model 3 random interior filters keep the contract") {
  const NetworkConfig base = edge_cfg(4, 2, 1, 1, 0, 0, 0);
  for (Approach a : {Approach::A, Approach::C, Approach::D}) {
    const NetworkConfig c = at_minimum(base, a);
    const ChannelSet ch = generate_channels(c, 12);
    const CoderSet x = design_basic(ch, a, 1);
    const CoderSet y = design_basic(ch, a, 2);
    CHECK((x.u(0, 0) - y.u(0, 0)).norm() > 1e-3);
    check_contract({ch, x});
    check_contract({ch, y});
  }
}

TEST_CASE("model 3 approach B edge interference rank") {
  NetworkConfig c = at_minimum(edge_cfg(4, 1, 2, 1, 0, 0, 0), Approach::B);
  c.N_r_edge += 1;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const Designed d = design(c, Approach::B, s);
    check_contract(d);
    for (int k = 0; k < 4; ++k) {
      for (int m = 1; m < 3; ++m) {
        CHECK(numerical_rank(interference_columns(d, k, m)) <= c.N_r_edge - c.M * c.d);
      }
    }
  }
}
