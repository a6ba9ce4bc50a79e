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
#include <optional>
#include <vector>

#include "mcia/coders.hpp"
#include "mcia/tables.hpp"

namespace mcia {

struct Codebook {
  int owner_cell = 0;
  std::vector<CMatrix> candidates;  // N_t × Md, orthonormal columns
  std::uint64_t seed = 0;
};

/// Independent orthonormalized Gaussian candidates. Throws InfeasibleAntennas if N_t < Md.
Codebook generate_codebook(const NetworkConfig& cfg, int owner_cell, int size, std::uint64_t seed);

/// One codebook per cell, each seeded from (seed, cell).
std::vector<Codebook> generate_codebooks(const NetworkConfig& cfg, int size, std::uint64_t seed);

/// Cells visited by the even and odd chains, in traversal order (0-based).
/// Paper-style labels are cell + 1, so the even chain holds labels 2, 4, ...
struct ParityChains {
  std::vector<int> even;
  std::vector<int> odd;
};
ParityChains parity_chains(int K);

struct ChainReport {
  ParityChains chains;
  /// Receivers whose wraparound alignment is not enforced.
  std::vector<int> boundary_cells;
  /// Mean over users of the squared chordal distance between the two incoming ICI subspaces.
  std::map<int, double> per_cell_alignment_error;
  /// Option d: chosen codebook index per cell.
  std::map<int, int> selected_index;
  /// Option e: sum of the Md smallest eigenvalues at each chained cell.
  std::map<int, double> eigen_residual;
};

struct AdvancedResult {
  CoderSet coders;
  ChainReport report;
};

/// Options a-e on the cyclic two-side network. Option d needs one codebook per cell.
AdvancedResult design_model2_advanced(const ChannelSet& ch, Approach option, std::uint64_t seed,
                                      const std::vector<Codebook>* codebooks = nullptr);

/// Approach F on the cyclic one-side network: random U, V absorbs all zero-forcing.
CoderSet design_model3_advanced(const ChannelSet& ch, std::uint64_t seed);

/// Selection metric of option d: sum over users of the squared chordal distance.
double codebook_score(const ChannelSet& ch, int receiver, int prev_cell, const CMatrix& phi_prev, int next_cell,
                      const CMatrix& candidate);

struct DesignSpec {
  Approach approach = Approach::A;
  int codebook_size = 0;  // option d only
};

struct DesignOutcome {
  CoderSet coders;
  std::optional<ChainReport> chain;
};

/// Dispatches to the basic or advanced construction that matches the topology.
DesignOutcome run_design(const ChannelSet& ch, const DesignSpec& spec, std::uint64_t seed,
                         const std::vector<Codebook>* codebooks = nullptr);

}  // namespace mcia
