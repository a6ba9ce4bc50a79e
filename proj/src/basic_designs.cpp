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
#include <algorithm>
#include <set>
#include <string>

#include "mcia/designs.hpp"
#include "mcia/errors.hpp"

namespace mcia {
namespace {

enum Stream : std::int64_t { kPhi = 1, kPsi, kLambda, kRandomU, kRandomV, kCombination };

std::string user_name(int k, int m) { return "(" + std::to_string(k) + "," + std::to_string(m) + ")"; }

class Builder {
 public:
  Builder(const ChannelSet& ch, std::uint64_t seed)
      : ch_(ch), cfg_(ch.config()), seed_(seed), Md_(cfg_.M * cfg_.d) {}

  CoderSet run(Approach a) {
    require_feasible(cfg_, a);
    switch (a) {
      case Approach::A: approach_a(); break;
      case Approach::B: approach_b(); break;
      case Approach::C: approach_c(); break;
      case Approach::D: approach_d(); break;
      case Approach::E: approach_e(); break;
      default:
        throw Error(ErrorKind::UnknownApproach, "basic designs cover A-E, got " + to_string(a));
    }
    normalize_coders(out_);
    return std::move(out_);
  }

 private:
  const CMatrix& H(int j, int k, int m) const { return ch_.h(j, k, m); }
  int nr(int m) const { return cfg_.rx_antennas(m); }

  GaussianSource source(Stream s, int a, int b = 0) const {
    return GaussianSource(derive_seed(seed_, {s, a, b}));
  }

  CMatrix random_u(int k, int m) const {
    auto src = source(kRandomU, k, m);
    return random_orthonormal(nr(m), cfg_.d, src);
  }

  // Orthonormal basis of the complement of span(cols), width q; random if cols is empty.
  CMatrix orth_complement(const CMatrix& cols, int q, GaussianSource src, const std::string& what) const {
    if (cols.cols() == 0) return random_orthonormal(static_cast<int>(cols.rows()), q, src);
    return null_or_singular(cols.adjoint(), q, what);
  }

  static CMatrix null_or_singular(const CMatrix& a, int q, const std::string& what) {
    try {
      return null_space_basis(a, q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::EmptyNullSpace) throw Error(ErrorKind::SingularConstruction, what + ": " + e.detail());
      throw;
    }
  }

  static void require_full_row_rank(const CMatrix& b, const std::string& what) {
    const int r = numerical_rank(b);
    if (r < b.rows()) {
      throw Error(ErrorKind::SingularConstruction, what + " has rank " + std::to_string(r) + " < " +
                                                       std::to_string(b.rows()));
    }
  }

  void set_v_block(int k, const CMatrix& block) {
    out_.intermediates.raw_precoder[k] = block;
    for (int m = 0; m < cfg_.M; ++m) out_.precoders[{k, m}] = block.middleCols(m * cfg_.d, cfg_.d);
  }

  // V_k as the first Md columns of pinv(B_k); B_k must have full row rank.
  void precoder_from_stack(int k, const CMatrix& b) {
    out_.intermediates.stacked[k] = b;
    require_full_row_rank(b, "stacked design matrix of BS " + std::to_string(k));
    set_v_block(k, pseudo_inverse(b).leftCols(Md_));
  }

  // Random q-column combination of an orthonormal null basis of A.
  CMatrix joint_solution(const CMatrix& a, int q, std::int64_t tag, const std::string& what) const {
    const CMatrix n = null_space_basis(a);
    if (n.cols() < q) {
      throw Error(ErrorKind::SingularConstruction, what + ": null space has dimension " + std::to_string(n.cols()) +
                                                       " < " + std::to_string(q));
    }
    auto src = source(kCombination, static_cast<int>(tag));
    return n * random_gaussian(static_cast<int>(n.cols()), q, src);
  }

  void approach_a() {
    auto& im = out_.intermediates;
    for (int k = 0; k < cfg_.K; ++k) {
      auto src = source(kPhi, k);
      im.phi[k] = random_orthonormal(cfg_.N_t, Md_, src);
    }
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        const auto I = cfg_.interferers(k, m);
        if (I.empty()) {
          out_.receive_filters[{k, m}] = random_u(k, m);
          continue;
        }
        std::vector<CMatrix> blocks;
        for (int j : I) blocks.push_back(H(j, k, m) * im.phi[j]);
        out_.receive_filters[{k, m}] =
            null_or_singular(hstack(blocks, nr(m)).adjoint(), cfg_.d, "ICI null space at user " + user_name(k, m));
      }
    }
    for (int k = 0; k < cfg_.K; ++k) {
      std::vector<CMatrix> rows;
      for (int m = 0; m < cfg_.M; ++m) rows.push_back(out_.receive_filters[{k, m}].adjoint() * H(k, k, m) * im.phi[k]);
      const CMatrix s = vstack(rows, Md_);
      im.stacked[k] = s;
      require_full_row_rank(s, "effective channel of BS " + std::to_string(k));
      const CMatrix s_inv = s.partialPivLu().inverse();
      for (int m = 0; m < cfg_.M; ++m) im.v_tilde[{k, m}] = s_inv.middleCols(m * cfg_.d, cfg_.d);
      set_v_block(k, im.phi[k] * s_inv);
    }
  }

  void approach_b() {
    auto& im = out_.intermediates;
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        if (cfg_.interferers(k, m).empty()) continue;
        auto src = source(kPsi, k, m);
        im.psi[{k, m}] = random_orthonormal(nr(m), Md_, src);
      }
    }
    for (int k = 0; k < cfg_.K; ++k) {
      std::vector<CMatrix> rows;
      for (const UserId& vu : cfg_.victims(k)) {
        rows.push_back(im.psi.at(vu).adjoint() * H(k, vu.cell, vu.user));
      }
      CMatrix block;
      if (rows.empty()) {
        auto src = source(kRandomV, k);
        block = random_orthonormal(cfg_.N_t, Md_, src);
      } else {
        const CMatrix b = vstack(rows, cfg_.N_t);
        im.stacked[k] = b;
        block = null_or_singular(b, Md_, "ICI null space of BS " + std::to_string(k));
      }
      set_v_block(k, block);
    }
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        std::vector<CMatrix> cols;
        for (int n = 0; n < cfg_.M; ++n) {
          if (n != m) cols.push_back(H(k, k, m) * out_.precoders[{k, n}]);
        }
        const CMatrix iui = hstack(cols, nr(m));
        const auto psi = im.psi.find({k, m});
        if (psi == im.psi.end()) {
          out_.receive_filters[{k, m}] =
              orth_complement(iui, cfg_.d, source(kRandomU, k, m), "IUI null space at user " + user_name(k, m));
          continue;
        }
        const CMatrix reduced = psi->second.adjoint() * iui;
        const CMatrix ut =
            orth_complement(reduced, cfg_.d, source(kRandomU, k, m), "IUI null space at user " + user_name(k, m));
        im.u_tilde[{k, m}] = ut;
        out_.receive_filters[{k, m}] = psi->second * ut;
      }
    }
  }

  void approach_c() {
    auto& im = out_.intermediates;
    for (int m = 0; m < cfg_.M; ++m) {
      auto src = source(kLambda, m);
      im.lambda[m] = random_orthonormal(cfg_.N_t, cfg_.d, src);
    }
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        const auto I = cfg_.interferers(k, m);
        if (I.empty()) {
          out_.receive_filters[{k, m}] = random_u(k, m);
          continue;
        }
        std::vector<CMatrix> blocks;
        for (int j : I) blocks.push_back(H(j, k, m));
        const CMatrix hs = hstack(blocks, nr(m));
        const int r = numerical_rank(hs);
        if (r < hs.cols()) {
          throw Error(ErrorKind::SingularConstruction,
                      "stacked interfering channels at user " + user_name(k, m) + " are rank-deficient");
        }
        const CMatrix p = pseudo_inverse(hs);
        CMatrix g = CMatrix::Zero(cfg_.N_t, nr(m));
        for (std::size_t i = 0; i < I.size(); ++i) g += p.middleRows(static_cast<Eigen::Index>(i) * cfg_.N_t, cfg_.N_t);
        im.g[{k, m}] = g;
        out_.receive_filters[{k, m}] = g.adjoint() * im.lambda[m];
      }
    }
    for (int k = 0; k < cfg_.K; ++k) {
      std::vector<CMatrix> rows;
      for (int m = 0; m < cfg_.M; ++m) {
        const auto g = im.g.find({k, m});
        if (g != im.g.end()) rows.push_back(im.lambda[m].adjoint() * g->second * H(k, k, m));
        else rows.push_back(out_.receive_filters[{k, m}].adjoint() * H(k, k, m));
      }
      std::set<int> victim_users;
      for (const UserId& vu : cfg_.victims(k)) victim_users.insert(vu.user);
      for (int n : victim_users) rows.push_back(im.lambda[n].adjoint());
      precoder_from_stack(k, vstack(rows, cfg_.N_t));
    }
  }

  void approach_d() {
    auto& im = out_.intermediates;
    // interfering[k]: cells that reach some user of cell k.
    std::vector<std::vector<int>> interfering(cfg_.K);
    for (int k = 0; k < cfg_.K; ++k) {
      std::set<int> js;
      std::vector<int> users;
      for (int m = 0; m < cfg_.M; ++m) {
        const auto I = cfg_.interferers(k, m);
        if (I.empty()) {
          out_.receive_filters[{k, m}] = random_u(k, m);
          continue;
        }
        js.insert(I.begin(), I.end());
        users.push_back(m);
      }
      interfering[k].assign(js.begin(), js.end());
      if (users.empty()) continue;

      // Unknown layout: Ω_j for j in interfering[k], then U_m for m in users.
      std::map<int, int> omega_at;
      std::map<int, int> u_at;
      int cols = 0;
      for (int j : interfering[k]) {
        omega_at[j] = cols;
        cols += cfg_.N_t;
      }
      for (int m : users) {
        u_at[m] = cols;
        cols += nr(m);
      }
      int rows = 0;
      for (int m : users) rows += static_cast<int>(cfg_.interferers(k, m).size()) * cfg_.N_t;
      CMatrix a = CMatrix::Zero(rows, cols);
      int r = 0;
      for (int m : users) {
        for (int j : cfg_.interferers(k, m)) {
          a.block(r, omega_at[j], cfg_.N_t, cfg_.N_t) = CMatrix::Identity(cfg_.N_t, cfg_.N_t);
          a.block(r, u_at[m], cfg_.N_t, nr(m)) = -H(j, k, m).adjoint();
          r += cfg_.N_t;
        }
      }
      const CMatrix x = joint_solution(a, cfg_.d, k, "reference subspaces of cell " + std::to_string(k));
      for (int j : interfering[k]) im.omega[{j, k}] = x.middleRows(omega_at[j], cfg_.N_t).adjoint();
      for (int m : users) out_.receive_filters[{k, m}] = x.middleRows(u_at[m], nr(m));
    }
    for (int k = 0; k < cfg_.K; ++k) {
      std::vector<CMatrix> rows;
      for (int m = 0; m < cfg_.M; ++m) rows.push_back(out_.receive_filters[{k, m}].adjoint() * H(k, k, m));
      for (int j = 0; j < cfg_.K; ++j) {
        if (std::find(interfering[j].begin(), interfering[j].end(), k) != interfering[j].end()) {
          rows.push_back(im.omega.at({k, j}));
        }
      }
      precoder_from_stack(k, vstack(rows, cfg_.N_t));
    }
  }

  void approach_e() {
    auto& im = out_.intermediates;
    std::vector<UserId> users;
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        if (!cfg_.interferers(k, m).empty()) users.push_back({k, m});
      }
    }
    if (users.empty()) {
      for (int k = 0; k < cfg_.K; ++k) {
        auto src = source(kRandomV, k);
        set_v_block(k, random_orthonormal(cfg_.N_t, Md_, src));
      }
    } else {
      // Users and the cells interfering with them form a coupling graph; each
      // connected component is an independent system (two parity halves for an
      // even two-side ring).
      std::vector<int> parent(cfg_.K);
      for (int k = 0; k < cfg_.K; ++k) parent[k] = k;
      auto find = [&](int c) {
        while (parent[c] != c) c = parent[c] = parent[parent[c]];
        return c;
      };
      for (const UserId& u : users) {
        const auto I = cfg_.interferers(u.cell, u.user);
        for (int j : I) parent[find(j)] = find(I.front());
      }
      std::vector<bool> solved(cfg_.K, false);
      int tag = 0;
      for (int root = 0; root < cfg_.K; ++root) {
        if (find(root) != root) continue;
        std::vector<UserId> part;
        for (const UserId& u : users) {
          if (find(cfg_.interferers(u.cell, u.user).front()) == root) part.push_back(u);
        }
        if (part.empty()) continue;
        std::vector<int> cells;
        for (int k = 0; k < cfg_.K; ++k) {
          if (find(k) == root) cells.push_back(k);
        }
        // Unknown layout: Θ^{k:m} for the component's users, then V_j for its cells.
        std::map<UserId, int> theta_at;
        std::map<int, int> v_at;
        int cols = 0;
        int rows = 0;
        for (const UserId& u : part) {
          theta_at[u] = cols;
          cols += nr(u.user);
          rows += static_cast<int>(cfg_.interferers(u.cell, u.user).size()) * nr(u.user);
        }
        for (int j : cells) {
          v_at[j] = cols;
          cols += cfg_.N_t;
        }
        CMatrix a = CMatrix::Zero(rows, cols);
        int r = 0;
        for (const UserId& u : part) {
          const int n = nr(u.user);
          for (int j : cfg_.interferers(u.cell, u.user)) {
            a.block(r, theta_at[u], n, n) = CMatrix::Identity(n, n);
            a.block(r, v_at[j], n, cfg_.N_t) = -H(j, u.cell, u.user);
            r += n;
          }
        }
        const CMatrix x = joint_solution(a, Md_, tag++, "joint transmit reference system");
        for (const UserId& u : part) im.theta[u] = x.middleRows(theta_at[u], nr(u.user));
        for (int j : cells) {
          const CMatrix v = x.middleRows(v_at[j], cfg_.N_t);
          if (numerical_rank(v) < Md_) {
            throw Error(ErrorKind::SingularConstruction,
                        "precoder block of cell " + std::to_string(j + 1) + " has rank below Md");
          }
          set_v_block(j, v);
          solved[j] = true;
        }
      }
      for (int k = 0; k < cfg_.K; ++k) {
        if (solved[k]) continue;
        auto src = source(kRandomV, k);
        set_v_block(k, random_orthonormal(cfg_.N_t, Md_, src));
      }
    }
    for (int k = 0; k < cfg_.K; ++k) {
      for (int m = 0; m < cfg_.M; ++m) {
        std::vector<CMatrix> cols;
        for (int n = 0; n < cfg_.M; ++n) {
          if (n != m) cols.push_back(H(k, k, m) * out_.precoders[{k, n}]);
        }
        const auto th = im.theta.find({k, m});
        if (th != im.theta.end()) cols.push_back(th->second);
        out_.receive_filters[{k, m}] = orth_complement(hstack(cols, nr(m)), cfg_.d, source(kRandomU, k, m),
                                                       "interference null space at user " + user_name(k, m));
      }
    }
  }

  const ChannelSet& ch_;
  const NetworkConfig& cfg_;
  std::uint64_t seed_;
  int Md_;
  CoderSet out_;
};

void require_topology(const ChannelSet& ch, Topology t, const char* fn) {
  if (ch.config().topology != t) {
    throw Error(ErrorKind::InvalidConfig,
                std::string(fn) + " expects topology " + to_string(t) + ", got " + to_string(ch.config().topology));
  }
}

}  // namespace

CoderSet design_basic(const ChannelSet& ch, Approach approach, std::uint64_t seed) {
  if (!is_basic(approach)) {
    throw Error(ErrorKind::UnknownApproach, "basic designs cover A-E, got " + to_string(approach));
  }
  return Builder(ch, seed).run(approach);
}

CoderSet design_full_connected(const ChannelSet& ch, Approach approach, std::uint64_t seed) {
  require_topology(ch, Topology::FullConnected, "design_full_connected");
  return design_basic(ch, approach, seed);
}

CoderSet design_cyclic_two_side(const ChannelSet& ch, Approach approach, std::uint64_t seed) {
  require_topology(ch, Topology::CyclicTwoSide, "design_cyclic_two_side");
  return design_basic(ch, approach, seed);
}

CoderSet design_cyclic_one_side(const ChannelSet& ch, Approach approach, std::uint64_t seed) {
  require_topology(ch, Topology::CyclicOneSideEdge, "design_cyclic_one_side");
  return design_basic(ch, approach, seed);
}

}  // namespace mcia
