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

#include <optional>
#include <string>
#include <vector>

#include "mcia/network.hpp"

namespace mcia {

/// Basic approaches A-E, model-3 advanced F, model-2 advanced options a-e.
enum class Approach { A, B, C, D, E, F, AdvA, AdvB, AdvC, AdvD, AdvE };

/// "A".."F" and "a".."e".
std::string to_string(Approach a);
Approach approach_from_string(const std::string& s);  // throws UnknownApproach

bool is_basic(Approach a);
bool is_model2_option(Approach a);
bool approach_valid(Topology t, Approach a);
std::vector<Approach> approaches_for(Topology t);

/// A step-level antenna condition lhs >= rhs with its symbolic form.
struct Inequality {
  std::string expr;
  long long lhs = 0;
  long long rhs = 0;

  bool holds() const { return lhs >= rhs; }
  std::string describe() const;
};

/// Exactly the dimension conditions of the construction steps. Throws UnknownApproach.
std::vector<Inequality> step_conditions(const NetworkConfig& cfg, Approach a);

/// Throws InfeasibleAntennas naming the first violated condition.
void require_feasible(const NetworkConfig& cfg, Approach a);

struct MinAntennas {
  long long bs = 0;
  long long ms = 0;                   // interior MS for the one-side model
  std::optional<long long> ms_edge;   // set for the one-side model
  std::string bs_expr;
  std::string ms_expr;                // "(a,b)" for the one-side model
  std::string note;                   // substitution the row presumes, if any
};

MinAntennas min_antennas(Topology t, Approach a, const NetworkConfig& cfg);

struct CsiEntry {
  std::string side;     // "BS" or "MS"
  std::string source;
  std::string content;
  std::string quantity_expr;
  std::vector<long long> quantity;
};

struct ComplexityEntry {
  std::string side;
  std::string target;
  std::string operation;
  std::string scale_expr;
  std::vector<long long> scale;
};

struct ResourceRow {
  Approach approach = Approach::A;
  MinAntennas antennas;
  std::vector<CsiEntry> csi_entries;
  std::vector<ComplexityEntry> complexity_entries;
  /// Rows that knowingly differ from the published table.
  std::vector<std::string> inconsistencies;
};

/// codebook_size feeds the |B| factor of the codebook rows.
ResourceRow resource_report(Topology t, Approach a, const NetworkConfig& cfg, int codebook_size = 0);

}  // namespace mcia
