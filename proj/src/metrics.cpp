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
#include "mcia/metrics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mcia/errors.hpp"

namespace mcia {
namespace {

std::string dims(const CMatrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

double log2_det_hpd(const CMatrix& a) {
  Eigen::LLT<CMatrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::DimensionMismatch, "covariance is not positive definite");
  }
  const auto& l = llt.matrixLLT();
  double s = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) s += std::log2(l(i, i).real());
  return 2.0 * s;
}

// Per-user desired and interference covariances without the power factor.
struct Covariances {
  CMatrix desired;
  CMatrix interference;
};

std::vector<Covariances> covariances(const ChannelSet& ch, const CoderSet& coders) {
  const auto& cfg = ch.config();
  std::vector<Covariances> out;
  for (int k = 0; k < cfg.K; ++k) {
    for (int m = 0; m < cfg.M; ++m) {
      const CMatrix& u = coders.u(k, m);
      Covariances c{CMatrix::Zero(u.cols(), u.cols()), CMatrix::Zero(u.cols(), u.cols())};
      for (int j = 0; j < cfg.K; ++j) {
        if (!ch.has(j, k, m)) continue;
        const CMatrix uh = u.adjoint() * ch.h(j, k, m);
        for (int n = 0; n < cfg.M; ++n) {
          const CMatrix b = uh * coders.v(j, n);
          if (j == k && n == m) c.desired = b * b.adjoint();
          else c.interference += b * b.adjoint();
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

void check_shapes(const ChannelSet& ch, const CoderSet& coders) {
  const auto& cfg = ch.config();
  for (int k = 0; k < cfg.K; ++k) {
    for (int m = 0; m < cfg.M; ++m) {
      const auto u = coders.receive_filters.find({k, m});
      const auto v = coders.precoders.find({k, m});
      if (u == coders.receive_filters.end() || v == coders.precoders.end()) {
        throw Error(ErrorKind::DimensionMismatch, "coders missing for user (" + std::to_string(k) + "," +
                                                      std::to_string(m) + ")");
      }
      if (u->second.rows() != cfg.rx_antennas(m) || v->second.rows() != cfg.N_t ||
          u->second.cols() != v->second.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "coder shapes U " + dims(u->second) + ", V " +
                                                      dims(v->second) + " do not fit the configuration");
      }
    }
  }
}

}  // namespace

double chordal_distance_sq(const CMatrix& p, const CMatrix& q) {
  if (p.rows() != q.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "row counts differ: " + dims(p) + " vs " + dims(q));
  }
  const CMatrix op = orthonormal_basis(p);
  const CMatrix oq = orthonormal_basis(q);
  const double w = static_cast<double>(std::max(op.cols(), oq.cols()));
  const double overlap = (op.adjoint() * oq).squaredNorm();
  return std::max(0.0, w - overlap);
}

double interference_leakage(const CMatrix& p, const CMatrix& q) {
  if (p.rows() != q.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "row counts differ: " + dims(p) + " vs " + dims(q));
  }
  return (p.adjoint() * q).squaredNorm();
}

double LeakageReport::max_normalized_residual() const {
  double r = 0.0;
  for (const auto& [id, u] : per_user) r = std::max(r, u.normalized_residual);
  return r;
}

double LeakageReport::mean_normalized_residual() const {
  if (per_user.empty()) return 0.0;
  double s = 0.0;
  for (const auto& [id, u] : per_user) s += u.normalized_residual;
  return s / static_cast<double>(per_user.size());
}

double LeakageReport::min_desired_singular() const {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& [id, u] : per_user) r = std::min(r, u.desired_min_singular);
  return r;
}

double LeakageReport::total_leakage() const {
  double s = 0.0;
  for (const auto& [id, u] : per_user) s += u.iui_power + u.ici_power;
  return s;
}

LeakageReport leakage_report(const ChannelSet& ch, const CoderSet& coders) {
  check_shapes(ch, coders);
  const auto& cfg = ch.config();
  LeakageReport rep;
  for (int k = 0; k < cfg.K; ++k) {
    for (int m = 0; m < cfg.M; ++m) {
      const CMatrix& u = coders.u(k, m);
      UserLeakage ul;
      for (int j = 0; j < cfg.K; ++j) {
        if (!ch.has(j, k, m)) continue;
        const CMatrix uh = u.adjoint() * ch.h(j, k, m);
        for (int n = 0; n < cfg.M; ++n) {
          const CMatrix b = uh * coders.v(j, n);
          if (j == k && n == m) {
            ul.desired_power = b.squaredNorm();
            Eigen::JacobiSVD<CMatrix> svd(b);
            ul.desired_min_singular = svd.singularValues().minCoeff();
          } else if (j == k) {
            ul.iui_power += b.squaredNorm();
          } else {
            ul.ici_power += b.squaredNorm();
          }
        }
      }
      ul.normalized_residual = (ul.iui_power + ul.ici_power) / std::max(ul.desired_power, kResidualFloor);
      rep.per_user[{k, m}] = ul;
    }
  }
  return rep;
}

std::vector<double> sum_rates(const ChannelSet& ch, const CoderSet& coders, const std::vector<double>& snr_db) {
  check_shapes(ch, coders);
  const auto& cfg = ch.config();
  const auto covs = covariances(ch, coders);
  const double md = static_cast<double>(cfg.M * cfg.d);
  std::vector<double> out;
  out.reserve(snr_db.size());
  for (double s : snr_db) {
    if (!std::isfinite(s)) throw Error(ErrorKind::DimensionMismatch, "snr_db must be finite");
    const double c = std::pow(10.0, s / 10.0) / md;
    double total = 0.0;
    for (const auto& cv : covs) {
      const auto n = cv.desired.rows();
      const CMatrix eye = CMatrix::Identity(n, n);
      const CMatrix noise_plus_int = eye + c * cv.interference;
      const double r = log2_det_hpd(noise_plus_int + c * cv.desired) - log2_det_hpd(noise_plus_int);
      total += std::max(0.0, r);
    }
    out.push_back(total);
  }
  return out;
}

double sum_rate(const ChannelSet& ch, const CoderSet& coders, double snr_db) {
  return sum_rates(ch, coders, {snr_db}).front();
}

double dof_slope(const RateCurve& curve, std::pair<double, double> window_db) {
  const double eps = 1e-9;
  const double to_log2 = std::log2(10.0) / 10.0;
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : curve.points) {
    if (p.snr_db >= window_db.first - eps && p.snr_db <= window_db.second + eps) {
      pts.emplace_back(p.snr_db * to_log2, p.sum_rate);
    }
  }
  if (pts.size() < 2) {
    throw Error(ErrorKind::InsufficientPoints, std::to_string(pts.size()) + " point(s) inside [" +
                                                   std::to_string(window_db.first) + ", " +
                                                   std::to_string(window_db.second) + "] dB");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx <= 0.0) throw Error(ErrorKind::InsufficientPoints, "window points share one SNR value");
  return sxy / sxx;
}

std::vector<double> default_snr_grid() {
  std::vector<double> g;
  for (int s = 0; s <= 60; s += 5) g.push_back(s);
  return g;
}

nlohmann::json to_json(const RateCurve& curve) {
  nlohmann::json j;
  j["snr_db"] = nlohmann::json::array();
  j["sum_rate_bits"] = nlohmann::json::array();
  for (const auto& p : curve.points) {
    j["snr_db"].push_back(p.snr_db);
    j["sum_rate_bits"].push_back(p.sum_rate);
  }
  j["dof_slope"] = curve.dof_slope;
  j["slope_window_db"] = {curve.slope_window_db.first, curve.slope_window_db.second};
  return j;
}

nlohmann::json to_json(const LeakageReport& report) {
  nlohmann::json users = nlohmann::json::array();
  for (const auto& [id, u] : report.per_user) {
    users.push_back({{"cell", id.cell},
                     {"user", id.user},
                     {"desired_min_singular", u.desired_min_singular},
                     {"iui_power", u.iui_power},
                     {"ici_power", u.ici_power},
                     {"normalized_residual", u.normalized_residual}});
  }
  return {{"per_user", users},
          {"max_normalized_residual", report.max_normalized_residual()},
          {"mean_normalized_residual", report.mean_normalized_residual()}};
}

std::string to_csv(const RateCurve& curve) {
  std::ostringstream os;
  os.precision(17);
  os << "snr_db,sum_rate_bits\n";
  for (const auto& p : curve.points) os << p.snr_db << ',' << p.sum_rate << '\n';
  return os.str();
}

}  // namespace mcia
