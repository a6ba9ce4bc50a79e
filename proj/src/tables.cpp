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
#include "mcia/tables.hpp"

#include <algorithm>
#include <functional>

#include "mcia/errors.hpp"

namespace mcia {
namespace {

using ll = long long;

ll ceil_div(ll a, ll b) { return b <= 0 ? 0 : (a + b - 1) / b; }

struct Dims {
  ll K, M, Ms, Me, d, Nt, Nr, Nrs, Nre;
};

Dims dims_of(const NetworkConfig& c) {
  return {c.K, c.M, c.M_star, c.M_edge, c.d, c.N_t, c.N_r, c.N_r_star, c.N_r_edge};
}

void unknown(Topology t, Approach a) {
  throw Error(ErrorKind::UnknownApproach,
              "approach " + to_string(a) + " is not defined for topology " + to_string(t));
}

void push_unique(std::vector<Inequality>& v, Inequality q) {
  for (const auto& e : v) {
    if (e.expr == q.expr) return;
  }
  v.push_back(std::move(q));
}

// Model 1 and 2 share structure; 'I' is the interferer count per user and
// 'iexpr' its symbol ("(K-1)" or "2").
std::vector<Inequality> uniform_conditions(const Dims& x, Approach a, ll I, const std::string& iexpr) {
  const ll Md = x.M * x.d;
  std::vector<Inequality> v;
  switch (a) {
    case Approach::A:
      v.push_back({"N_t ≥ Md", x.Nt, Md});
      v.push_back({"N_r ≥ " + iexpr + "Md+d", x.Nr, I * Md + x.d});
      break;
    case Approach::B:
      v.push_back({"N_t ≥ " + iexpr + "M^2d+Md", x.Nt, I * x.M * Md + Md});
      v.push_back({"N_r ≥ Md", x.Nr, Md});
      break;
    case Approach::C:
      v.push_back({"N_r ≥ " + iexpr + "N_t", x.Nr, I * x.Nt});
      v.push_back({"N_t ≥ 2Md", x.Nt, 2 * Md});
      break;
    case Approach::D:
      v.push_back({iexpr + "N_t+MN_r ≥ " + iexpr + "MN_t+d", I * x.Nt + x.M * x.Nr, I * x.M * x.Nt + x.d});
      v.push_back({"N_t ≥ Md+" + iexpr + "d", x.Nt, Md + I * x.d});
      break;
    case Approach::E: {
      const std::string rhs = (iexpr == "2") ? "2KMN_r+Md" : "K(K-1)MN_r+Md";
      v.push_back({"KMN_r+KN_t ≥ " + rhs, x.K * x.M * x.Nr + x.K * x.Nt, x.K * I * x.M * x.Nr + Md});
      // For even K the two-side graph is bipartite and the system splits into two parity halves.
      if (I == 2 && x.K % 2 == 0) v.push_back({"KN_t ≥ KMN_r+2Md (even K)", x.K * x.Nt, x.K * x.M * x.Nr + 2 * Md});
      v.push_back({"N_r ≥ 2Md", x.Nr, 2 * Md});
      break;
    }
    default:
      break;
  }
  push_unique(v, {"N_t ≥ Md", x.Nt, Md});
  push_unique(v, {"N_r ≥ d", x.Nr, x.d});
  return v;
}

std::vector<Inequality> one_side_conditions(const Dims& x, Approach a) {
  const ll Md = x.M * x.d;
  const bool edge = x.Me > 0;
  const bool interior = x.Ms > 0;
  std::vector<Inequality> v;
  switch (a) {
    case Approach::A:
      v.push_back({"N_t ≥ Md", x.Nt, Md});
      if (edge) v.push_back({"N_r° ≥ Md+d", x.Nre, Md + x.d});
      break;
    case Approach::B:
      v.push_back({"N_t ≥ M°Md+Md", x.Nt, x.Me * Md + Md});
      if (edge) v.push_back({"N_r° ≥ Md", x.Nre, Md});
      if (interior) v.push_back({"N_r* ≥ Md", x.Nrs, Md});
      break;
    case Approach::C:
      v.push_back({"N_t ≥ Md+M°d", x.Nt, Md + x.Me * x.d});
      if (edge) v.push_back({"N_r° ≥ N_t", x.Nre, x.Nt});
      break;
    case Approach::D:
      if (edge) v.push_back({"N_t+M°N_r° ≥ MN_t+d", x.Nt + x.Me * x.Nre, x.M * x.Nt + x.d});
      v.push_back({"N_t ≥ Md+d", x.Nt, Md + x.d});
      break;
    case Approach::E:
      v.push_back({"KN_t ≥ Md", x.K * x.Nt, Md});
      if (edge) v.push_back({"N_r° ≥ 2Md", x.Nre, 2 * Md});
      if (interior) v.push_back({"N_r* ≥ Md", x.Nrs, Md});
      break;
    case Approach::F:
      v.push_back({"N_t ≥ M°d+Md", x.Nt, x.Me * x.d + Md});
      break;
    default:
      break;
  }
  push_unique(v, {"N_t ≥ Md", x.Nt, Md});
  if (interior) push_unique(v, {"N_r* ≥ d", x.Nrs, x.d});
  if (edge) push_unique(v, {"N_r° ≥ d", x.Nre, x.d});
  return v;
}

std::vector<Inequality> option_conditions(const Dims& x, Approach a) {
  const ll Md = x.M * x.d;
  std::vector<Inequality> v;
  switch (a) {
    case Approach::AdvA:
      // K N_t >= K M N_r + 2Md is the integer form of N_t >= MN_r + 2Md/K.
      v.push_back({"N_t ≥ MN_r+2Md/K", x.K * x.Nt, x.K * x.M * x.Nr + 2 * Md});
      break;
    case Approach::AdvB:
      v.push_back({"N_t ≥ MN_r", x.Nt, x.M * x.Nr});
      break;
    case Approach::AdvC:
      v.push_back({"N_t ≥ 2Md", x.Nt, 2 * Md});
      break;
    default:
      break;
  }
  push_unique(v, {"N_t ≥ Md", x.Nt, Md});
  v.push_back({"N_r ≥ Md+d", x.Nr, Md + x.d});
  return v;
}

}  // namespace

std::string to_string(Approach a) {
  switch (a) {
    case Approach::A: return "A";
    case Approach::B: return "B";
    case Approach::C: return "C";
    case Approach::D: return "D";
    case Approach::E: return "E";
    case Approach::F: return "F";
    case Approach::AdvA: return "a";
    case Approach::AdvB: return "b";
    case Approach::AdvC: return "c";
    case Approach::AdvD: return "d";
    case Approach::AdvE: return "e";
  }
  return "?";
}

Approach approach_from_string(const std::string& s) {
  static const std::pair<const char*, Approach> table[] = {
      {"A", Approach::A},    {"B", Approach::B},    {"C", Approach::C},    {"D", Approach::D},
      {"E", Approach::E},    {"F", Approach::F},    {"a", Approach::AdvA}, {"b", Approach::AdvB},
      {"c", Approach::AdvC}, {"d", Approach::AdvD}, {"e", Approach::AdvE},
  };
  for (const auto& [name, a] : table) {
    if (s == name) return a;
  }
  throw Error(ErrorKind::UnknownApproach, "unknown approach '" + s + "'");
}

bool is_basic(Approach a) {
  return a == Approach::A || a == Approach::B || a == Approach::C || a == Approach::D || a == Approach::E;
}

bool is_model2_option(Approach a) {
  return a == Approach::AdvA || a == Approach::AdvB || a == Approach::AdvC || a == Approach::AdvD ||
         a == Approach::AdvE;
}

bool approach_valid(Topology t, Approach a) {
  if (is_basic(a)) return true;
  if (a == Approach::F) return t == Topology::CyclicOneSideEdge;
  return t == Topology::CyclicTwoSide;
}

std::vector<Approach> approaches_for(Topology t) {
  std::vector<Approach> out{Approach::A, Approach::B, Approach::C, Approach::D, Approach::E};
  if (t == Topology::CyclicTwoSide) {
    out.insert(out.end(), {Approach::AdvA, Approach::AdvB, Approach::AdvC, Approach::AdvD, Approach::AdvE});
  } else if (t == Topology::CyclicOneSideEdge) {
    out.push_back(Approach::F);
  }
  return out;
}

std::string Inequality::describe() const {
  return expr + " (" + std::to_string(lhs) + (holds() ? " ≥ " : " < ") + std::to_string(rhs) + ")";
}

std::vector<Inequality> step_conditions(const NetworkConfig& cfg, Approach a) {
  if (!approach_valid(cfg.topology, a)) unknown(cfg.topology, a);
  const Dims x = dims_of(cfg);
  switch (cfg.topology) {
    case Topology::FullConnected:
      return uniform_conditions(x, a, x.K - 1, "(K-1)");
    case Topology::CyclicTwoSide:
      if (is_model2_option(a)) return option_conditions(x, a);
      return uniform_conditions(x, a, 2, "2");
    case Topology::CyclicOneSideEdge:
      return one_side_conditions(x, a);
  }
  return {};
}

void require_feasible(const NetworkConfig& cfg, Approach a) {
  for (const auto& q : step_conditions(cfg, a)) {
    if (!q.holds()) throw Error(ErrorKind::InfeasibleAntennas, q.describe());
  }
}

MinAntennas min_antennas(Topology t, Approach a, const NetworkConfig& cfg) {
  if (!approach_valid(t, a)) unknown(t, a);
  const Dims x = dims_of(cfg);
  const ll K = x.K, M = x.M, d = x.d, Md = M * d, Me = x.Me;
  MinAntennas r;
  if (t == Topology::FullConnected || (t == Topology::CyclicTwoSide && is_basic(a))) {
    const bool m1 = t == Topology::FullConnected;
    const ll I = m1 ? K - 1 : 2;
    const std::string s = m1 ? "(K-1)" : "2";
    switch (a) {
      case Approach::A:
        r = {Md, I * Md + d, {}, "Md", s + "Md+d", ""};
        break;
      case Approach::B:
        r = {I * M * Md + Md, Md, {}, s + "M^2d+Md", "Md", ""};
        break;
      case Approach::C:
        r = {2 * Md, I * 2 * Md, {}, "2Md", m1 ? "(K-1)2Md" : "4Md", ""};
        break;
      case Approach::D:
        r = {(M + I) * d, ceil_div(I * (M - 1) * (M + I) * d + d, M), {}, m1 ? "(M+K-1)d" : "(M+2)d",
             s + "(M-1)/M(M+" + (m1 ? "K-1" : "2") + ")d+d/M", ""};
        break;
      case Approach::E:
        if (m1) {
          r = {ceil_div((K * M - 2 * M) * 2 * Md * K + Md, K), 2 * Md, {}, "(KM-2M)2Md+(M/K)d", "2Md",
               "BS minimum presumes the substitution N_r = 2Md"};
        } else {
          r = {ceil_div(2 * M * Md * K + Md, K), 2 * Md, {}, "2M^2d+(M/K)d", "2Md",
               "BS minimum presumes the substitution N_r = 2Md"};
        }
        break;
      default:
        break;
    }
    return r;
  }
  if (t == Topology::CyclicTwoSide) {
    const ll ms = Md + d;
    switch (a) {
      case Approach::AdvA:
        return {ceil_div(K * M * ms + 2 * Md, K), ms, {}, "MN_r+2Md/K", "Md+d",
                "BS minimum evaluated at N_r = Md+d"};
      case Approach::AdvB:
        return {M * ms, ms, {}, "MN_r", "Md+d", "BS minimum evaluated at N_r = Md+d"};
      case Approach::AdvC:
        return {2 * Md, ms, {}, "2Md", "Md+d", ""};
      default:
        return {Md, ms, {}, "Md", "Md+d", ""};
    }
  }
  // One-side edge model.
  switch (a) {
    case Approach::A:
      return {Md, d, Md + d, "Md", "(d,Md+d)", ""};
    case Approach::B:
      return {(Me + 1) * Md, Md, Md, "(M°+1)Md", "(Md,Md)", ""};
    case Approach::C:
      return {Md + Me * d, d, Md + Me * d, "Md+M°d", "(d,Md+M°d)", ""};
    case Approach::D:
      return {(M + 1) * d, d, ceil_div(M * M * d, Me), "(M+1)d", "(d,(M^2/M°)d)",
              Me == 0 ? "no edge users; edge minimum not applicable" : ""};
    case Approach::E:
      return {Md, Md, 2 * Md, "Md", "(Md,2Md)", ""};
    case Approach::F:
      return {Me * d + Md, d, d, "M°d+Md", "(d,d)", ""};
    default:
      break;
  }
  unknown(t, a);
  return r;
}

namespace {

using Row = ResourceRow;

CsiEntry csi(std::string side, std::string src, std::string content, std::string qexpr,
             std::vector<ll> q) {
  return {std::move(side), std::move(src), std::move(content), std::move(qexpr), std::move(q)};
}

ComplexityEntry cx(std::string side, std::string target, std::string op, std::string sexpr,
                   std::vector<ll> s) {
  return {std::move(side), std::move(target), std::move(op), std::move(sexpr), std::move(s)};
}

void uniform_resources(Row& r, const Dims& x, Approach a, bool m1) {
  const ll I = m1 ? x.K - 1 : 2;
  const std::string s = m1 ? "K-1" : "2";
  const std::string inter = m1 ? "all inter-cell" : "adjacent inter-cell";
  const ll M = x.M, d = x.d, Md = M * d, Nt = x.Nt, Nr = x.Nr, K = x.K;
  switch (a) {
    case Approach::A:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "U_{k:m}†H_k^{k:m}", "M", {M}),
                       csi("MS", inter + " BSs", "H_j^{k:m}Φ_j", s, {I})};
      r.complexity_entries = {cx("BS", "Ṽ_{k:m}", "matrix inverse", "Md×Md", {Md, Md}),
                              cx("MS", "U_{k:m}", "null space", "N_r×d", {Nr, d})};
      break;
    case Approach::B:
      r.csi_entries = {csi("BS", inter + " MSs", "Ψ_{j:n}†H_k^{j:n}", m1 ? "(K-1)M" : "2M", {I * M}),
                       csi("MS", "intra-cell BS", "H_k^{k:m}V_{k:n}", "M-1", {M - 1})};
      r.complexity_entries = {cx("BS", "V_{k:m}", "null space", "N_t×Md", {Nt, Md}),
                              cx("MS", "Ũ_{k:m}", "null space", "Md×d", {Md, d})};
      break;
    case Approach::C:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "G_{k:m}H_k^{k:m}", "M", {M}),
                       csi("MS", inter + " BSs", "H_j^{k:m}", s, {I})};
      r.complexity_entries = {
          cx("BS", "V_{k:m}", "matrix inverse", "2Md×N_t", {2 * Md, Nt}),
          cx("MS", "G_{k:m}", "matrix inverse", m1 ? "N_r×(K-1)N_t" : "N_r×2N_t", {Nr, I * Nt})};
      break;
    case Approach::D:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "U_{k:m}†H_k^{k:m}", "M", {M}),
                       csi("BS", m1 ? "other inter-cell MSs" : "adjacent inter-cell MSs", "Ω_k^j", s, {I}),
                       csi("MS", inter + " BSs (excl. conferencing)", "H_j^{k:m}", s, {I})};
      r.complexity_entries = {
          cx("BS", "V_{k:m}", "matrix inverse", m1 ? "(M+K-1)d×N_t" : "(M+2)d×N_t", {(M + I) * d, Nt}),
          cx("MS", "U_{k:m},Ω_j^k", "null space", m1 ? "[(K-1)N_t+MN_r]×d" : "(2N_t+MN_r)×d",
             {I * Nt + M * Nr, d})};
      break;
    case Approach::E:
      r.csi_entries = {csi("BS", inter + " MSs (excl. backhaul)", "H_k^{j:m}", m1 ? "(K-1)M" : "2M", {I * M}),
                       csi("MS", "intra-cell BS", "H_k^{k:m}V_{k:n}", "M-1", {M - 1}),
                       csi("MS", "intra-cell BS", "Θ^{k:m}", "1", {1})};
      r.complexity_entries = {
          cx("BS", "V_{k:m},Θ^{k:m}", "null space", "(KMN_r+KN_t)×Md", {K * M * Nr + K * Nt, Md}),
          cx("MS", "U_{k:m}", "null space", "N_r×d", {Nr, d})};
      break;
    default:
      break;
  }
}

void one_side_resources(Row& r, const Dims& x, Approach a) {
  const ll M = x.M, Ms = x.Ms, Me = x.Me, d = x.d, Md = M * d, Nt = x.Nt, K = x.K;
  const ll Nrs = x.Nrs, Nre = x.Nre;
  switch (a) {
    case Approach::A:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "U_{k:m}†H_k^{k:m}", "M", {M}),
                       csi("MS", "adjacent inter-cell BS", "(/,H_{k+1}^{k:m°}Φ_{k+1})", "1", {1})};
      r.complexity_entries = {cx("BS", "Ṽ_{k:m}", "matrix inverse", "Md×Md", {Md, Md}),
                              cx("MS", "(/,U_{k:m°})", "null space", "N_r°×d", {Nre, d})};
      break;
    case Approach::B:
      r.csi_entries = {csi("BS", "adjacent inter-cell MSs", "(/,Ψ_{k-1:n}†H_k^{k-1:n})", "M°", {Me}),
                       csi("MS", "intra-cell BS", "(H_k^{k:m*}V_{k:n},Ψ_{k:m°}†H_k^{k:m°}V_{k:n})",
                           "(M-1,M-1)", {M - 1, M - 1})};
      r.complexity_entries = {cx("BS", "V_{k:m}", "null space", "N_t×Md", {Nt, Md}),
                              cx("MS", "(U_{k:m*},Ũ_{k:m°})", "null space", "(N_r*×d,N_r°×d)",
                                 {Nrs, d, Nre, d})};
      break;
    case Approach::C:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "(U_{k:m*}†H_k^{k:m*},G_{k:m°}H_k^{k:m°})",
                           "(M*,M°)", {Ms, Me}),
                       csi("MS", "adjacent inter-cell BS", "(/,H_{k+1}^{k:m°})", "1", {1})};
      r.complexity_entries = {cx("BS", "V_{k:m}", "matrix inverse", "(M+M°)d×N_t", {(M + Me) * d, Nt}),
                              cx("MS", "(/,G_{k:m°})", "matrix inverse", "N_r°×N_t", {Nre, Nt})};
      break;
    case Approach::D:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "(U_{k:m*}†H_k^{k:m*},U_{k:m°}†H_k^{k:m°})",
                           "(M*,M°)", {Ms, Me}),
                       csi("BS", "adjacent inter-cell MSs", "Ω_k^{k-1}", "1", {1}),
                       csi("MS", "adjacent inter-cell BS (excl. conferencing)", "H_{k+1}^{k:m°}", "1", {1})};
      r.complexity_entries = {cx("BS", "V_{k:m}", "matrix inverse", "(M+1)d×N_t", {(M + 1) * d, Nt}),
                              cx("MS", "(/,(U_{k:m°},Ω_j^k))", "null space", "(N_t+M°N_r°)×d",
                                 {Nt + Me * Nre, d})};
      break;
    case Approach::E:
      r.csi_entries = {csi("BS", "adjacent inter-cell MSs (excl. backhaul)", "(/,H_k^{k-1:m°})", "M°", {Me}),
                       csi("MS", "intra-cell BS", "(H_k^{k:m*}V_{k:n},H_k^{k:m°}V_{k:n})", "(M-1,M-1)",
                           {M - 1, M - 1}),
                       csi("MS", "intra-cell BS", "Θ^{k:m°}", "1", {1})};
      r.complexity_entries = {
          cx("BS", "V_{k:m},Θ^{k:m°}", "null space", "(KM°N_r°+KN_t)×Md", {K * Me * Nre + K * Nt, Md}),
          cx("MS", "(U_{k:m*},U_{k:m°})", "null space", "(N_r*×d,N_r°×d)", {Nrs, d, Nre, d})};
      break;
    case Approach::F:
      r.csi_entries = {csi("BS", "all intra-cell MSs", "(U_{k:m*}†H_k^{k:m*},U_{k:m°}†H_k^{k:m°})",
                           "(M*,M°)", {Ms, Me}),
                       csi("BS", "adjacent inter-cell MSs", "(/,U_{k-1:m°}†H_k^{k-1:m°})", "(/,M°)", {Me})};
      r.complexity_entries = {cx("BS", "V_{k:m}", "matrix inverse", "(M°d+Md)×N_t", {Me * d + Md, Nt})};
      break;
    default:
      break;
  }
}

void option_resources(Row& r, const Dims& x, Approach a, ll codebook) {
  const ll M = x.M, d = x.d, Md = M * d, Nt = x.Nt, Nr = x.Nr, K = x.K;
  r.csi_entries = {csi("BS", "all intra-cell MSs", "U_{k:m}†H_k^{k:m}", "M", {M})};
  r.complexity_entries = {cx("BS", "Ṽ_{k:m}", "matrix inverse", "Md×Md", {Md, Md})};
  switch (a) {
    case Approach::AdvA:
      r.csi_entries.push_back(csi("BS", "adjacent inter-cell MSs (excl. backhaul)",
                                  "H_k^{k-1:m},H_k^{k+1:m}", "M,M", {M, M}));
      if (K % 2 == 0) {
        r.complexity_entries.push_back(cx("BS", "Φ_k", "null space", "N_tK/2×Md", {Nt * K / 2, Md}));
      } else {
        r.complexity_entries.push_back(cx("BS", "Φ_k", "null space", "N_tK×Md", {Nt * K, Md}));
        r.inconsistencies.push_back(
            "odd K: both parity sets form one cycle, solved as a single joint system of KN_t unknowns");
      }
      break;
    case Approach::AdvB:
    case Approach::AdvD:
      r.csi_entries.push_back(csi("BS", "adjacent and preceding-adjacent inter-cell MSs",
                                  "H_{k-2}^{k-1:m}Φ_{k-2},H_k^{k-1:m}", "M,M", {M, M}));
      if (a == Approach::AdvB) {
        r.complexity_entries.push_back(cx("BS", "Φ_k", "matrix inverse", "N_t×MN_r", {Nt, M * Nr}));
      } else {
        r.complexity_entries.push_back(
            cx("BS", "Φ_k", "chordal distance", "N_r×Md×|B_k|×M", {Nr, Md, codebook, M}));
        r.csi_entries.push_back(csi("BS", "shared codebook", "selected index of B_k", "1", {1}));
      }
      break;
    case Approach::AdvC:
    case Approach::AdvE:
      r.csi_entries.push_back(
          csi("BS", "adjacent inter-cell MSs", "U_{k-1:m}†H_k^{k-1:m}", "M", {M}));
      if (a == Approach::AdvC) {
        r.complexity_entries.push_back(cx("BS", "Φ_k", "null space", "N_t×Md", {Nt, Md}));
      } else {
        r.complexity_entries.push_back(
            cx("BS", "Φ_k", "Hermitian eigendecomposition", "N_t×N_t", {Nt, Nt}));
        r.inconsistencies.push_back(
            "published row lists 'trace, d×Md×|B_k|×M', implying a codebook search; "
            "the construction is the codebook-free smallest-eigenvector solution");
      }
      break;
    default:
      break;
  }
  r.csi_entries.push_back(csi("MS", "adjacent inter-cell BS", "H_{k-1}^{k:m}Φ_{k-1}", "1", {1}));
  r.complexity_entries.push_back(cx("MS", "U_{k:m}", "null space", "N_r×d", {Nr, d}));
}

}  // namespace

ResourceRow resource_report(Topology t, Approach a, const NetworkConfig& cfg, int codebook_size) {
  ResourceRow r;
  r.approach = a;
  r.antennas = min_antennas(t, a, cfg);
  const Dims x = dims_of(cfg);
  if (t == Topology::CyclicOneSideEdge) {
    one_side_resources(r, x, a);
  } else if (is_model2_option(a)) {
    option_resources(r, x, a, codebook_size);
  } else {
    uniform_resources(r, x, a, t == Topology::FullConnected);
  }
  if (t == Topology::CyclicTwoSide && a == Approach::E && x.K % 2 == 0 &&
      x.K * r.antennas.bs < x.K * x.M * r.antennas.ms + 2 * x.M * x.d) {
    r.inconsistencies.push_back(
        "even K: the transmit-reference system splits into two parity halves with (K/2)(N_t-MN_r) free "
        "dimensions each, so the published minimum falls short of KN_t ≥ KMN_r+2Md");
  }
  return r;
}

}  // namespace mcia
