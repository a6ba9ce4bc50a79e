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
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "mcia/coders.hpp"
#include "mcia/network.hpp"

namespace mcia {

/// w - Tr(Ô_P† Ô_Q Ô_Q† Ô_P) on orthonormal range bases, w the larger basis width.
/// Throws DimensionMismatch or ZeroMatrix.
double chordal_distance_sq(const CMatrix& p, const CMatrix& q);

/// ||P† Q||_F^2. Throws DimensionMismatch.
double interference_leakage(const CMatrix& p, const CMatrix& q);

struct UserLeakage {
  double desired_min_singular = 0.0;
  double desired_power = 0.0;
  double iui_power = 0.0;
  double ici_power = 0.0;
  double normalized_residual = 0.0;
};

struct LeakageReport {
  std::map<UserId, UserLeakage> per_user;

  double max_normalized_residual() const;
  double mean_normalized_residual() const;
  double min_desired_singular() const;
  /// Sum of iui + ici power over all users.
  double total_leakage() const;
};

inline constexpr double kResidualFloor = 1e-30;

/// Throws DimensionMismatch when coders do not fit the channel set.
LeakageReport leakage_report(const ChannelSet& ch, const CoderSet& coders);

/// Sum over users of log2 det(I + S (J + I)^-1), per-BS power split over Md streams.
double sum_rate(const ChannelSet& ch, const CoderSet& coders, double snr_db);

/// Same formula over a grid, sharing the effective-channel products.
std::vector<double> sum_rates(const ChannelSet& ch, const CoderSet& coders, const std::vector<double>& snr_db);

struct RatePoint {
  double snr_db = 0.0;
  double sum_rate = 0.0;
};

struct RateCurve {
  std::vector<RatePoint> points;
  double dof_slope = 0.0;
  std::pair<double, double> slope_window_db{40.0, 60.0};
};

/// Least-squares slope of rate against log2(rho) inside [lo, hi] dB. Throws InsufficientPoints.
double dof_slope(const RateCurve& curve, std::pair<double, double> window_db = {40.0, 60.0});

std::vector<double> default_snr_grid();  // 0:5:60 dB

nlohmann::json to_json(const RateCurve& curve);
nlohmann::json to_json(const LeakageReport& report);
std::string to_csv(const RateCurve& curve);

}  // namespace mcia
