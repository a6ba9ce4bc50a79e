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

#include <mcia/advanced.hpp>
#include <mcia/designs.hpp>
#include <mcia/errors.hpp>
#include <mcia/linalg.hpp>
#include <mcia/metrics.hpp>
#include <mcia/network.hpp>
#include <mcia/rng.hpp>
#include <mcia/tables.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace mcia::testing {

inline CMatrix gauss(int rows, int cols, std::uint64_t seed) {
  GaussianSource src(seed);
  return random_gaussian(rows, cols, src);
}

inline double frob2(const CMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  }
  return s;
}

inline double min_singular(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a);
  return svd.singularValues().size() ? svd.singularValues().minCoeff() : 0.0;
}

// Link rule written out from the topology definitions, independent of NetworkConfig::has_link.
inline bool link_oracle(const NetworkConfig& c, int j, int k, int m) {
  const int K = c.K;
  switch (c.topology) {
    case Topology::FullConnected:
      return true;
    case Topology::CyclicTwoSide:
      return j == k || j == (k + 1) % K || j == (k + K - 1) % K;
    case Topology::CyclicOneSideEdge:
      return j == k || (m >= c.M_star && j == (k + 1) % K);
  }
  return false;
}

struct BruteLeakage {
  double max_residual = 0.0;
  double min_desired_sv = std::numeric_limits<double>::infinity();
  double total = 0.0;
  std::map<UserId, double> residual;
};

// Every (tx, stream) pair reaching every receiver, evaluated term by term.
inline BruteLeakage brute_leakage(const ChannelSet& ch, const CoderSet& cs) {
  const auto& c = ch.config();
  BruteLeakage out;
  for (int k = 0; k < c.K; ++k) {
    for (int m = 0; m < c.M; ++m) {
      double desired = 0.0;
      double interf = 0.0;
      for (int j = 0; j < c.K; ++j) {
        if (!link_oracle(c, j, k, m)) continue;
        for (int n = 0; n < c.M; ++n) {
          const CMatrix b = cs.u(k, m).adjoint() * ch.h(j, k, m) * cs.v(j, n);
          if (j == k && n == m) {
            desired = frob2(b);
            out.min_desired_sv = std::min(out.min_desired_sv, min_singular(b));
          } else {
            interf += frob2(b);
          }
        }
      }
      const double r = interf / std::max(desired, 1e-30);
      out.residual[{k, m}] = r;
      out.max_residual = std::max(out.max_residual, r);
      out.total += interf;
    }
  }
  return out;
}

// Modified Gram-Schmidt with a relative drop tolerance.
inline CMatrix gram_schmidt(const CMatrix& a, double tol = 1e-9) {
  std::vector<Eigen::VectorXcd> q;
  double scale = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) scale = std::max(scale, a.col(j).norm());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Eigen::VectorXcd v = a.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : q) v -= e * e.dot(v);
    }
    const double n = v.norm();
    if (n > tol * std::max(scale, 1e-300)) q.push_back(v / n);
  }
  CMatrix out(a.rows(), static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = q[i];
  return out;
}

// w - Trace(P^H Q Q^H P) with explicit sums over basis pairs.
inline double chordal_oracle(const CMatrix& p, const CMatrix& q) {
  const CMatrix op = gram_schmidt(p);
  const CMatrix oq = gram_schmidt(q);
  double overlap = 0.0;
  for (Eigen::Index i = 0; i < op.cols(); ++i) {
    for (Eigen::Index j = 0; j < oq.cols(); ++j) {
      std::complex<double> ip = 0.0;
      for (Eigen::Index r = 0; r < op.rows(); ++r) ip += std::conj(op(r, i)) * oq(r, j);
      overlap += std::norm(ip);
    }
  }
  return static_cast<double>(std::max(op.cols(), oq.cols())) - overlap;
}

inline NetworkConfig uniform_cfg(Topology t, int K, int M, int d, int N_t, int N_r) {
  NetworkConfig c;
  c.topology = t;
  c.K = K;
  c.M = M;
  c.d = d;
  c.N_t = N_t;
  c.N_r = N_r;
  return c;
}

inline NetworkConfig edge_cfg(int K, int M_star, int M_edge, int d, int N_t, int N_r_star, int N_r_edge) {
  NetworkConfig c;
  c.topology = Topology::CyclicOneSideEdge;
  c.K = K;
  c.M = M_star + M_edge;
  c.M_star = M_star;
  c.M_edge = M_edge;
  c.d = d;
  c.N_t = N_t;
  c.N_r_star = N_r_star;
  c.N_r_edge = N_r_edge;
  return c;
}

// cfg with antenna counts replaced by the table minimum for approach a.
inline NetworkConfig at_minimum(NetworkConfig c, Approach a) {
  const MinAntennas m = min_antennas(c.topology, a, c);
  c.N_t = static_cast<int>(m.bs);
  if (c.topology == Topology::CyclicOneSideEdge) {
    c.N_r_star = static_cast<int>(m.ms);
    c.N_r_edge = static_cast<int>(m.ms_edge.value_or(0));
  } else {
    c.N_r = static_cast<int>(m.ms);
  }
  return c;
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an mcia::Error");
}

}  // namespace mcia::testing
