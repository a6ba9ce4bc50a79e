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
#include "mcia/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <set>
#include <string>
#include <thread>

#include "mcia/errors.hpp"

namespace mcia {

int workers_from_env() {
  const char* v = std::getenv(kWorkersEnv);
  if (v == nullptr) return 1;
  const int n = std::atoi(v);
  return n >= 1 ? n : 1;
}

namespace {

TrialSummary run_trial(const NetworkConfig& cfg, const DesignSpec& spec, const std::vector<double>& grid,
                       std::uint64_t seed, int t, const std::vector<Codebook>* books) {
  const ChannelSet ch = generate_channels(cfg, derive_seed(seed, {t, 0}));
  const DesignOutcome d = run_design(ch, spec, derive_seed(seed, {t, 1}), books);
  const LeakageReport rep = leakage_report(ch, d.coders);
  TrialSummary s;
  s.rates = sum_rates(ch, d.coders, grid);
  s.max_normalized_residual = rep.max_normalized_residual();
  s.mean_normalized_residual = rep.mean_normalized_residual();
  s.total_leakage = rep.total_leakage();
  s.min_desired_singular = rep.min_desired_singular();
  if (d.chain) s.boundary_cells = d.chain->boundary_cells;
  for (const auto& [id, u] : rep.per_user) {
    if (std::find(s.boundary_cells.begin(), s.boundary_cells.end(), id.cell) != s.boundary_cells.end()) continue;
    s.max_residual_outside_boundary = std::max(s.max_residual_outside_boundary, u.normalized_residual);
  }
  return s;
}

}  // namespace

SweepResult run_sweep(const NetworkConfig& cfg, const DesignSpec& spec, const std::vector<double>& grid, int trials,
                      std::uint64_t seed, const SweepOptions& opts) {
  if (trials < 1) throw Error(ErrorKind::InvalidScenario, "trials must be ≥ 1");
  if (grid.empty()) throw Error(ErrorKind::InvalidScenario, "SNR grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw Error(ErrorKind::InvalidScenario, "SNR grid must be strictly increasing");
  }
  const auto violations = validate_config(cfg);
  if (!violations.empty()) throw Error(ErrorKind::InvalidConfig, violations.front());

  std::vector<Codebook> books;
  if (spec.approach == Approach::AdvD) {
    if (spec.codebook_size < 1) throw Error(ErrorKind::MissingCodebook, "option d needs codebook_size ≥ 1");
    books = generate_codebooks(cfg, spec.codebook_size, derive_seed(seed, {-1}));
  }
  const std::vector<Codebook>* bp = books.empty() ? nullptr : &books;

  std::vector<TrialSummary> out(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    for (int t = next++; t < trials && !failed; t = next++) {
      try {
        out[static_cast<std::size_t>(t)] = run_trial(cfg, spec, grid, seed, t, bp);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
        failed = true;
      }
    }
  };
  const int nw = std::max(1, std::min(opts.workers, trials));
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (int t = 0; t < trials; ++t) {
    if (!errors[static_cast<std::size_t>(t)]) continue;
    try {
      std::rethrow_exception(errors[static_cast<std::size_t>(t)]);
    } catch (const Error& e) {
      throw Error(ErrorKind::TrialFailed, "trial " + std::to_string(t) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorKind::TrialFailed, "trial " + std::to_string(t) + ": " + e.what());
    }
  }

  // Fixed-order reduction keeps the result independent of the worker count.
  SweepResult res;
  res.curve.slope_window_db = opts.slope_window_db;
  std::vector<double> acc(grid.size(), 0.0);
  std::set<int> boundary;
  double mean_res = 0.0, leak = 0.0;
  for (const auto& s : out) {
    for (std::size_t i = 0; i < grid.size(); ++i) acc[i] += s.rates[i];
    res.max_normalized_residual = std::max(res.max_normalized_residual, s.max_normalized_residual);
    res.max_residual_outside_boundary = std::max(res.max_residual_outside_boundary, s.max_residual_outside_boundary);
    mean_res += s.mean_normalized_residual;
    leak += s.total_leakage;
    boundary.insert(s.boundary_cells.begin(), s.boundary_cells.end());
  }
  for (std::size_t i = 0; i < grid.size(); ++i) res.curve.points.push_back({grid[i], acc[i] / trials});
  res.mean_normalized_residual = mean_res / trials;
  res.mean_total_leakage = leak / trials;
  res.boundary_cells.assign(boundary.begin(), boundary.end());
  res.curve.dof_slope = dof_slope(res.curve, opts.slope_window_db);
  res.trials = std::move(out);
  return res;
}

RateCurve rate_sweep(const NetworkConfig& cfg, const DesignSpec& spec, const std::vector<double>& grid, int trials,
                     std::uint64_t seed) {
  SweepOptions opts;
  opts.workers = workers_from_env();
  return run_sweep(cfg, spec, grid, trials, seed, opts).curve;
}

}  // namespace mcia
