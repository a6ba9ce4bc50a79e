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
#include <vector>

#include "mcia/advanced.hpp"
#include "mcia/metrics.hpp"

namespace mcia {

/// Environment variable holding the trial worker count; unset means serial.
inline constexpr const char* kWorkersEnv = "MCIA_WORKERS";
int workers_from_env();

struct TrialSummary {
  std::vector<double> rates;            // one per grid point
  double max_normalized_residual = 0.0;
  double mean_normalized_residual = 0.0;
  /// Largest normalized residual over users outside the boundary cells.
  double max_residual_outside_boundary = 0.0;
  double total_leakage = 0.0;
  double min_desired_singular = 0.0;
  std::vector<int> boundary_cells;
};

struct SweepResult {
  RateCurve curve;
  std::vector<TrialSummary> trials;
  double max_normalized_residual = 0.0;
  double mean_normalized_residual = 0.0;
  double max_residual_outside_boundary = 0.0;
  double mean_total_leakage = 0.0;
  std::vector<int> boundary_cells;  // union over trials
};

struct SweepOptions {
  std::pair<double, double> slope_window_db{40.0, 60.0};
  int workers = 1;
};

/// Trial t draws channels from derive_seed(seed, {t, 0}) and design randomness from
/// derive_seed(seed, {t, 1}). Codebooks for option d come from derive_seed(seed, {-1}).
/// A failed trial aborts the sweep with TrialFailed naming the trial index.
SweepResult run_sweep(const NetworkConfig& cfg, const DesignSpec& spec, const std::vector<double>& snr_grid_db,
                      int trials, std::uint64_t seed, const SweepOptions& opts = {});

RateCurve rate_sweep(const NetworkConfig& cfg, const DesignSpec& spec, const std::vector<double>& snr_grid_db,
                     int trials, std::uint64_t seed);

}  // namespace mcia
