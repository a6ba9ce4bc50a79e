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

// Published antenna, CSI and complexity rows, evaluated in floating point and
// rounded up, kept separate from the integer closures in src/tables.cpp.

#include <mcia/network.hpp>
#include <mcia/tables.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace mcia::testing {

struct RowOracle {
  long long bs = 0;
  long long ms = 0;
  long long ms_edge = -1;  // -1 for the uniform models
  std::string bs_expr;
  std::string ms_expr;
  std::vector<std::vector<long long>> bs_csi;
  std::vector<std::vector<long long>> ms_csi;
  std::vector<std::vector<long long>> bs_scale;
  std::vector<std::vector<long long>> ms_scale;
};

inline long long up(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

inline RowOracle table_oracle(const NetworkConfig& c, Approach a, long long codebook = 0) {
  const double K = c.K, M = c.M, d = c.d, Me = c.M_edge;
  const long long k = c.K, m = c.M, md = c.M * c.d, dd = c.d;
  const long long nt = c.N_t, nr = c.N_r, me = c.M_edge, ms = c.M_star;
  RowOracle r;
  if (c.topology == Topology::FullConnected) {
    switch (a) {
      case Approach::A:
        r = {md, up((K - 1) * M * d + d), -1, "Md", "(K-1)Md+d", {{m}}, {{k - 1}}, {{md, md}}, {{nr, dd}}};
        break;
      case Approach::B:
        r = {up((K - 1) * M * M * d + M * d), md, -1, "(K-1)M^2d+Md", "Md",
             {{(k - 1) * m}}, {{m - 1}}, {{nt, md}}, {{md, dd}}};
        break;
      case Approach::C:
        r = {2 * md, up((K - 1) * 2 * M * d), -1, "2Md", "(K-1)2Md", {{m}}, {{k - 1}}, {{2 * md, nt}},
             {{nr, (k - 1) * nt}}};
        break;
      case Approach::D:
        r = {up((M + K - 1) * d), up((K - 1) * (M - 1) / M * (M + K - 1) * d + d / M), -1, "(M+K-1)d",
             "(K-1)(M-1)/M(M+K-1)d+d/M", {{m}, {k - 1}}, {{k - 1}}, {{(m + k - 1) * dd, nt}},
             {{(k - 1) * nt + m * nr, dd}}};
        break;
      case Approach::E:
        r = {up((K * M - 2 * M) * 2 * M * d + (M / K) * d), 2 * md, -1, "(KM-2M)2Md+(M/K)d", "2Md",
             {{(k - 1) * m}}, {{m - 1}, {1}}, {{k * m * nr + k * nt, md}}, {{nr, dd}}};
        break;
      default:
        break;
    }
    return r;
  }
  if (c.topology == Topology::CyclicTwoSide) {
    const double Nr_opt = M * d + d;
    switch (a) {
      case Approach::A:
        r = {md, 2 * md + dd, -1, "Md", "2Md+d", {{m}}, {{2}}, {{md, md}}, {{nr, dd}}};
        break;
      case Approach::B:
        r = {up(2 * M * M * d + M * d), md, -1, "2M^2d+Md", "Md", {{2 * m}}, {{m - 1}}, {{nt, md}}, {{md, dd}}};
        break;
      case Approach::C:
        r = {2 * md, 4 * md, -1, "2Md", "4Md", {{m}}, {{2}}, {{2 * md, nt}}, {{nr, 2 * nt}}};
        break;
      case Approach::D:
        r = {up((M + 2) * d), up(2 * (M - 1) / M * (M + 2) * d + d / M), -1, "(M+2)d", "2(M-1)/M(M+2)d+d/M",
             {{m}, {2}}, {{2}}, {{(m + 2) * dd, nt}}, {{2 * nt + m * nr, dd}}};
        break;
      case Approach::E:
        r = {up(2 * M * M * d + (M / K) * d), 2 * md, -1, "2M^2d+(M/K)d", "2Md", {{2 * m}}, {{m - 1}, {1}},
             {{k * m * nr + k * nt, md}}, {{nr, dd}}};
        break;
      case Approach::AdvA:
        r = {up(M * Nr_opt + 2 * M * d / K), md + dd, -1, "MN_r+2Md/K", "Md+d", {{m}, {m, m}}, {{1}},
             {{md, md}, {k % 2 == 0 ? nt * k / 2 : nt * k, md}}, {{nr, dd}}};
        break;
      case Approach::AdvB:
        r = {up(M * Nr_opt), md + dd, -1, "MN_r", "Md+d", {{m}, {m, m}}, {{1}}, {{md, md}, {nt, m * nr}},
             {{nr, dd}}};
        break;
      case Approach::AdvC:
        r = {2 * md, md + dd, -1, "2Md", "Md+d", {{m}, {m}}, {{1}}, {{md, md}, {nt, md}}, {{nr, dd}}};
        break;
      case Approach::AdvD:
        r = {md, md + dd, -1, "Md", "Md+d", {{m}, {m, m}, {1}}, {{1}}, {{md, md}, {nr, md, codebook, m}},
             {{nr, dd}}};
        break;
      case Approach::AdvE:
        // The BS scale follows the eigen-solution, not the published trace row.
        r = {md, md + dd, -1, "Md", "Md+d", {{m}, {m}}, {{1}}, {{md, md}, {nt, nt}}, {{nr, dd}}};
        break;
      default:
        break;
    }
    return r;
  }
  const long long nrs = c.N_r_star, nre = c.N_r_edge;
  switch (a) {
    case Approach::A:
      r = {md, dd, md + dd, "Md", "(d,Md+d)", {{m}}, {{1}}, {{md, md}}, {{nre, dd}}};
      break;
    case Approach::B:
      r = {up((Me + 1) * M * d), md, md, "(M°+1)Md", "(Md,Md)", {{me}}, {{m - 1, m - 1}}, {{nt, md}},
           {{nrs, dd, nre, dd}}};
      break;
    case Approach::C:
      r = {up(M * d + Me * d), dd, up(M * d + Me * d), "Md+M°d", "(d,Md+M°d)", {{ms, me}}, {{1}},
           {{(m + me) * dd, nt}}, {{nre, nt}}};
      break;
    case Approach::D:
      r = {up((M + 1) * d), dd, Me > 0 ? up(M * M / Me * d) : 0, "(M+1)d", "(d,(M^2/M°)d)", {{ms, me}, {1}}, {{1}},
           {{(m + 1) * dd, nt}}, {{nt + me * nre, dd}}};
      break;
    case Approach::E:
      r = {md, md, 2 * md, "Md", "(Md,2Md)", {{me}}, {{m - 1, m - 1}, {1}}, {{k * me * nre + k * nt, md}},
           {{nrs, dd, nre, dd}}};
      break;
    case Approach::F:
      r = {up(Me * d + M * d), dd, dd, "M°d+Md", "(d,d)", {{ms, me}, {me}}, {}, {{me * dd + md, nt}}, {}};
      break;
    default:
      break;
  }
  return r;
}

}  // namespace mcia::testing
