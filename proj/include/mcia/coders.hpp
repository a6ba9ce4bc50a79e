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

#include <map>
#include <utility>

#include "mcia/linalg.hpp"
#include "mcia/network.hpp"

namespace mcia {

/// Intermediate quantities of a construction, kept for certificates.
struct Intermediates {
  std::map<int, CMatrix> phi;                       // Φ_k, N_t × Md
  std::map<UserId, CMatrix> v_tilde;                // Ṽ_{k:m}, Md × d
  std::map<UserId, CMatrix> psi;                    // Ψ_{k:m}, N_r × Md
  std::map<UserId, CMatrix> u_tilde;                // Ũ_{k:m}, Md × d
  std::map<UserId, CMatrix> g;                      // G_{k:m}, N_t × N_r
  std::map<int, CMatrix> lambda;                    // Λ_m, N_t × d, keyed by user index
  std::map<std::pair<int, int>, CMatrix> omega;     // (j, k) -> Ω_j^k stored as d × N_t
  std::map<UserId, CMatrix> theta;                  // Θ^{k:m}, N_r × Md
  std::map<int, CMatrix> stacked;                   // B_k
  std::map<int, CMatrix> raw_precoder;              // [V_{k:1} … V_{k:M}] before normalization
};

struct CoderSet {
  std::map<UserId, CMatrix> precoders;        // V_{k:m}, N_t × d, unit-norm columns
  std::map<UserId, CMatrix> receive_filters;  // U_{k:m}, N_r(k,m) × d, orthonormal
  Intermediates intermediates;

  const CMatrix& v(int k, int m) const { return precoders.at({k, m}); }
  const CMatrix& u(int k, int m) const { return receive_filters.at({k, m}); }
};

/// Orthonormalizes every U and unit-normalizes every V column.
void normalize_coders(CoderSet& cs);

}  // namespace mcia
