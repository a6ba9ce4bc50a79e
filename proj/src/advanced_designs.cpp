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
#include <limits>
#include <string>

#include "mcia/advanced.hpp"
#include "mcia/designs.hpp"
#include "mcia/errors.hpp"
#include "mcia/metrics.hpp"

namespace mcia {
namespace {

enum Stream : std::int64_t { kChainStart = 11, kJoint, kRandomU, kCodebook };

int wrap(int k, int K) { return ((k % K) + K) % K; }

CMatrix null_or_singular(const CMatrix& a, int q, const std::string& what) {
  try {
    return null_space_basis(a, q);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyNullSpace) throw Error(ErrorKind::SingularConstruction, what + ": " + e.detail());
    throw;
  }
}

void require_full_row_rank(const CMatrix& b, const std::string& what) {
  const int r = numerical_rank(b);
  if (r < b.rows()) {
    throw Error(ErrorKind::SingularConstruction,
                what + " has rank " + std::to_string(r) + " < " + std::to_string(b.rows()));
  }
}

class ChainBuilder {
 public:
  ChainBuilder(const ChannelSet& ch, Approach option, std::uint64_t seed, const std::vector<Codebook>* books)
      : ch_(ch), cfg_(ch.config()), option_(option), seed_(seed), books_(books), Md_(cfg_.M * cfg_.d) {}

  AdvancedResult run() {
    report_.chains = parity_chains(cfg_.K);
    if (option_ == Approach::AdvA) {
      joint_alignment();
    } else {
      chain(report_.chains.even);
      chain(report_.chains.odd);
      for (const auto* c : {&report_.chains.even, &report_.chains.odd}) {
        if (!c->empty()) report_.boundary_cells.push_back(wrap(c->back() + 1, cfg_.K));
      }
      std::sort(report_.boundary_cells.begin(), report_.boundary_cells.end());
    }
    finish();
    return {std::move(out_), std::move(report_)};
  }

 private:
  const CMatrix& H(int j, int k, int m) const { return ch_.h(j, k, m); }

  // U_{r:m} annihilating H_prev^{r:m} Φ_prev.
  CMatrix aligned_filter(int r, int m, int prev) const {
    return null_or_singular((H(prev, r, m) * phi_.at(prev)).adjoint(), cfg_.d,
                            "ICI null space at user (" + std::to_string(r) + "," + std::to_string(m) + ")");
  }

  CMatrix start_phi(int cell) const {
    if (option_ == Approach::AdvD) return books_->at(cell).candidates.front();
    GaussianSource src(derive_seed(seed_, {kChainStart, cell}));
    return random_orthonormal(cfg_.N_t, Md_, src);
  }

  void chain(const std::vector<int>& cells) {
    if (cells.empty()) return;
    phi_[cells.front()] = start_phi(cells.front());
    if (option_ == Approach::AdvD) report_.selected_index[cells.front()] = 0;
    for (std::size_t t = 0; t + 1 < cells.size(); ++t) {
      const int prev = cells[t];
      const int next = cells[t + 1];
      const int r = wrap(prev + 1, cfg_.K);
      phi_[next] = step(prev, r, next);
    }
  }

  CMatrix step(int prev, int r, int next) {
    const int N_t = cfg_.N_t;
    switch (option_) {
      case Approach::AdvB: {
        std::vector<CMatrix> hn, hp;
        for (int m = 0; m < cfg_.M; ++m) {
          hn.push_back(H(next, r, m));
          hp.push_back(H(prev, r, m));
        }
        const CMatrix a = vstack(hn, N_t);
        require_full_row_rank(a, "stacked channel of BS " + std::to_string(next));
        return pseudo_inverse(a) * vstack(hp, N_t) * phi_.at(prev);
      }
      case Approach::AdvC: {
        std::vector<CMatrix> rows;
        for (int m = 0; m < cfg_.M; ++m) rows.push_back(aligned_filter(r, m, prev).adjoint() * H(next, r, m));
        return null_or_singular(vstack(rows, N_t), Md_, "alignment null space of BS " + std::to_string(next));
      }
      case Approach::AdvD: {
        const auto& cands = books_->at(next).candidates;
        std::vector<CMatrix> target;
        for (int m = 0; m < cfg_.M; ++m) target.push_back(orthonormal_basis(H(prev, r, m) * phi_.at(prev)));
        int best = 0;
        double best_score = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cands.size(); ++i) {
          double s = 0.0;
          for (int m = 0; m < cfg_.M; ++m) {
            const CMatrix oq = orthonormalize_columns(H(next, r, m) * cands[i]);
            const double w = static_cast<double>(std::max(target[m].cols(), oq.cols()));
            s += std::max(0.0, w - (target[m].adjoint() * oq).squaredNorm());
          }
          if (s < best_score) {
            best_score = s;
            best = static_cast<int>(i);
          }
        }
        report_.selected_index[next] = best;
        return cands[static_cast<std::size_t>(best)];
      }
      case Approach::AdvE: {
        CMatrix q = CMatrix::Zero(N_t, N_t);
        for (int m = 0; m < cfg_.M; ++m) {
          const CMatrix uh = aligned_filter(r, m, prev).adjoint() * H(next, r, m);
          q += uh.adjoint() * uh;
        }
        q = 0.5 * (q + q.adjoint());
        const EigenPairs ep = smallest_eigenpairs(q, Md_);
        report_.eigen_residual[next] = std::max(0.0, ep.values.sum());
        return ep.vectors;
      }
      default:
        throw Error(ErrorKind::UnknownApproach, "option " + to_string(option_) + " has no chain step");
    }
  }

  // Option a: one null space per parity group, wraparound rows included.
  void joint_alignment() {
    std::vector<std::vector<int>> groups;
    if (cfg_.K % 2 == 0) {
      groups = {report_.chains.even, report_.chains.odd};
    } else {
      std::vector<int> all(static_cast<std::size_t>(cfg_.K));
      for (int k = 0; k < cfg_.K; ++k) all[static_cast<std::size_t>(k)] = k;
      groups = {all};
    }
    const int N_t = cfg_.N_t;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& cells = groups[g];
      std::map<int, int> at;
      for (std::size_t i = 0; i < cells.size(); ++i) at[cells[i]] = static_cast<int>(i) * N_t;
      std::vector<int> receivers;
      for (int r = 0; r < cfg_.K; ++r) {
        if (at.count(wrap(r - 1, cfg_.K)) && at.count(wrap(r + 1, cfg_.K))) receivers.push_back(r);
      }
      const int rows = static_cast<int>(receivers.size()) * cfg_.M * cfg_.N_r;
      CMatrix a = CMatrix::Zero(rows, static_cast<Eigen::Index>(cells.size()) * N_t);
      int row = 0;
      for (int r : receivers) {
        const int lo = wrap(r - 1, cfg_.K);
        const int hi = wrap(r + 1, cfg_.K);
        for (int m = 0; m < cfg_.M; ++m) {
          a.block(row, at[lo], cfg_.N_r, N_t) += H(lo, r, m);
          a.block(row, at[hi], cfg_.N_r, N_t) -= H(hi, r, m);
          row += cfg_.N_r;
        }
      }
      const CMatrix n = null_space_basis(a);
      if (n.cols() < Md_) {
        throw Error(ErrorKind::SingularConstruction, "joint alignment null space has dimension " +
                                                         std::to_string(n.cols()) + " < " + std::to_string(Md_));
      }
      GaussianSource src(derive_seed(seed_, {kJoint, static_cast<std::int64_t>(g)}));
      const CMatrix x = n * random_gaussian(static_cast<int>(n.cols()), Md_, src);
      for (int c : cells) phi_[c] = x.middleRows(at[c], N_t);
    }
  }

  void finish() {
    auto& im = out_.intermediates;
    for (int r = 0; r < cfg_.K; ++r) {
      const int prev = wrap(r - 1, cfg_.K);
      const int next = wrap(r + 1, cfg_.K);
      double err = 0.0;
      for (int m = 0; m < cfg_.M; ++m) {
        out_.receive_filters[{r, m}] = aligned_filter(r, m, prev);
        err += chordal_distance_sq(H(prev, r, m) * phi_.at(prev), H(next, r, m) * phi_.at(next));
      }
      report_.per_cell_alignment_error[r] = err / cfg_.M;
    }
    for (int k = 0; k < cfg_.K; ++k) {
      const CMatrix& phi = phi_.at(k);
      im.phi[k] = phi;
      std::vector<CMatrix> rows;
      for (int m = 0; m < cfg_.M; ++m) rows.push_back(out_.receive_filters[{k, m}].adjoint() * H(k, k, m) * phi);
      const CMatrix s = vstack(rows, Md_);
      im.stacked[k] = s;
      require_full_row_rank(s, "effective channel of BS " + std::to_string(k));
      const CMatrix s_inv = s.partialPivLu().inverse();
      const CMatrix block = phi * s_inv;
      im.raw_precoder[k] = block;
      for (int m = 0; m < cfg_.M; ++m) {
        im.v_tilde[{k, m}] = s_inv.middleCols(m * cfg_.d, cfg_.d);
        out_.precoders[{k, m}] = block.middleCols(m * cfg_.d, cfg_.d);
      }
    }
    normalize_coders(out_);
  }

  const ChannelSet& ch_;
  const NetworkConfig& cfg_;
  Approach option_;
  std::uint64_t seed_;
  const std::vector<Codebook>* books_;
  int Md_;
  std::map<int, CMatrix> phi_;
  CoderSet out_;
  ChainReport report_;
};

void check_codebooks(const NetworkConfig& cfg, const std::vector<Codebook>* books) {
  if (books == nullptr || books->empty()) throw Error(ErrorKind::MissingCodebook, "option d needs one codebook per cell");
  if (static_cast<int>(books->size()) != cfg.K) {
    throw Error(ErrorKind::MissingCodebook, "expected " + std::to_string(cfg.K) + " codebooks, got " +
                                                std::to_string(books->size()));
  }
  for (int k = 0; k < cfg.K; ++k) {
    const auto& b = (*books)[static_cast<std::size_t>(k)];
    if (b.owner_cell != k || b.candidates.empty()) {
      throw Error(ErrorKind::MissingCodebook, "codebook " + std::to_string(k) + " is empty or owned by another cell");
    }
    for (const auto& c : b.candidates) {
      if (c.rows() != cfg.N_t || c.cols() != cfg.M * cfg.d) {
        throw Error(ErrorKind::DimensionMismatch, "codebook candidate shape does not match N_t × Md");
      }
    }
  }
}

}  // namespace

Codebook generate_codebook(const NetworkConfig& cfg, int owner_cell, int size, std::uint64_t seed) {
  const int Md = cfg.M * cfg.d;
  if (cfg.N_t < Md) {
    throw Error(ErrorKind::InfeasibleAntennas, "N_t ≥ Md (" + std::to_string(cfg.N_t) + " < " + std::to_string(Md) + ")");
  }
  if (size < 1) throw Error(ErrorKind::InvalidConfig, "codebook size must be ≥ 1");
  Codebook b{owner_cell, {}, seed};
  GaussianSource src(derive_seed(seed, {kCodebook, owner_cell}));
  b.candidates.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) b.candidates.push_back(random_orthonormal(cfg.N_t, Md, src));
  return b;
}

std::vector<Codebook> generate_codebooks(const NetworkConfig& cfg, int size, std::uint64_t seed) {
  std::vector<Codebook> out;
  for (int k = 0; k < cfg.K; ++k) out.push_back(generate_codebook(cfg, k, size, seed));
  return out;
}

ParityChains parity_chains(int K) {
  // Labels 1..K; the even chain walks 2, 4, ... and the odd chain 1, 3, ...
  ParityChains pc;
  for (int label = 2; label <= K; label += 2) pc.even.push_back(label - 1);
  for (int label = 1; label <= K; label += 2) pc.odd.push_back(label - 1);
  return pc;
}

double codebook_score(const ChannelSet& ch, int receiver, int prev_cell, const CMatrix& phi_prev, int next_cell,
                      const CMatrix& candidate) {
  double s = 0.0;
  for (int m = 0; m < ch.config().M; ++m) {
    s += chordal_distance_sq(ch.h(prev_cell, receiver, m) * phi_prev, ch.h(next_cell, receiver, m) * candidate);
  }
  return s;
}

AdvancedResult design_model2_advanced(const ChannelSet& ch, Approach option, std::uint64_t seed,
                                      const std::vector<Codebook>* codebooks) {
  const auto& cfg = ch.config();
  if (cfg.topology != Topology::CyclicTwoSide) {
    throw Error(ErrorKind::InvalidConfig, "advanced options a-e need the cyclic_two_side topology");
  }
  if (!is_model2_option(option)) {
    throw Error(ErrorKind::UnknownApproach, "advanced model-2 options are a-e, got " + to_string(option));
  }
  require_feasible(cfg, option);
  if (option == Approach::AdvD) check_codebooks(cfg, codebooks);
  return ChainBuilder(ch, option, seed, codebooks).run();
}

CoderSet design_model3_advanced(const ChannelSet& ch, std::uint64_t seed) {
  const auto& cfg = ch.config();
  if (cfg.topology != Topology::CyclicOneSideEdge) {
    throw Error(ErrorKind::InvalidConfig, "approach F needs the cyclic_one_side_edge topology");
  }
  require_feasible(cfg, Approach::F);
  const int Md = cfg.M * cfg.d;
  CoderSet out;
  for (int k = 0; k < cfg.K; ++k) {
    for (int m = 0; m < cfg.M; ++m) {
      GaussianSource src(derive_seed(seed, {kRandomU, k, m}));
      out.receive_filters[{k, m}] = random_orthonormal(cfg.rx_antennas(m), cfg.d, src);
    }
  }
  for (int k = 0; k < cfg.K; ++k) {
    std::vector<CMatrix> rows;
    const int left = wrap(k - 1, cfg.K);
    for (int m = 0; m < cfg.M; ++m) {
      if (ch.has(k, left, m) && left != k) rows.push_back(out.u(left, m).adjoint() * ch.h(k, left, m));
    }
    for (int m = 0; m < cfg.M; ++m) rows.push_back(out.u(k, m).adjoint() * ch.h(k, k, m));
    const CMatrix b = vstack(rows, cfg.N_t);
    out.intermediates.stacked[k] = b;
    require_full_row_rank(b, "stacked design matrix of BS " + std::to_string(k));
    const CMatrix block = pseudo_inverse(b).rightCols(Md);
    out.intermediates.raw_precoder[k] = block;
    for (int m = 0; m < cfg.M; ++m) out.precoders[{k, m}] = block.middleCols(m * cfg.d, cfg.d);
  }
  normalize_coders(out);
  return out;
}

DesignOutcome run_design(const ChannelSet& ch, const DesignSpec& spec, std::uint64_t seed,
                         const std::vector<Codebook>* codebooks) {
  const Topology t = ch.config().topology;
  if (!approach_valid(t, spec.approach)) {
    throw Error(ErrorKind::UnknownApproach,
                "approach " + to_string(spec.approach) + " is not defined for topology " + to_string(t));
  }
  if (is_basic(spec.approach)) return {design_basic(ch, spec.approach, seed), std::nullopt};
  if (spec.approach == Approach::F) return {design_model3_advanced(ch, seed), std::nullopt};
  auto r = design_model2_advanced(ch, spec.approach, seed, codebooks);
  return {std::move(r.coders), std::move(r.report)};
}

}  // namespace mcia
