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
#include "mcia/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "mcia/errors.hpp"

namespace mcia {
namespace {

constexpr double kZeroAbs = 1e-300;

int rank_from(const RVector& sv, double tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (!(smax > kZeroAbs)) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * smax) ++r;
  }
  return r;
}

std::string dims(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

int numerical_rank(const CMatrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(a);
  return rank_from(svd.singularValues(), tol);
}

CMatrix null_space_basis(const CMatrix& a, double tol) {
  const int c = static_cast<int>(a.cols());
  if (a.rows() == 0) return CMatrix::Identity(c, c);
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const int r = rank_from(svd.singularValues(), tol);
  CMatrix n = svd.matrixV().rightCols(c - r);
  canonicalize_phases(n);
  return n;
}

CMatrix null_space_basis(const CMatrix& a, int q, double tol) {
  CMatrix n = null_space_basis(a, tol);
  if (q < 0 || q > n.cols()) {
    throw Error(ErrorKind::EmptyNullSpace,
                "requested " + std::to_string(q) + " null directions of " + dims(a) +
                    ", only " + std::to_string(n.cols()) + " exist");
  }
  return n.leftCols(q);
}

CMatrix pseudo_inverse(const CMatrix& a, double tol) {
  if (a.size() == 0) return CMatrix::Zero(a.cols(), a.rows());
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& sv = svd.singularValues();
  const int r = rank_from(sv, tol);
  CMatrix out = CMatrix::Zero(a.cols(), a.rows());
  for (int i = 0; i < r; ++i) {
    out.noalias() += svd.matrixV().col(i) * (1.0 / sv(i)) * svd.matrixU().col(i).adjoint();
  }
  return out;
}

CMatrix orthonormal_basis(const CMatrix& a, double tol) {
  if (a.size() == 0) throw Error(ErrorKind::ZeroMatrix, "empty matrix " + dims(a));
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const int r = rank_from(svd.singularValues(), tol);
  if (r == 0) throw Error(ErrorKind::ZeroMatrix, "matrix " + dims(a) + " is numerically zero");
  CMatrix b = svd.matrixU().leftCols(r);
  canonicalize_phases(b);
  return b;
}

EigenPairs hermitian_eigen(const CMatrix& s) {
  if (s.rows() != s.cols()) {
    throw Error(ErrorKind::NotHermitian, "matrix " + dims(s) + " is not square");
  }
  const double scale = std::max(1.0, s.norm());
  if ((s - s.adjoint()).norm() > 1e-10 * scale) {
    throw Error(ErrorKind::NotHermitian, "asymmetry exceeds 1e-10 relative");
  }
  const CMatrix h = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  EigenPairs out{es.eigenvalues(), es.eigenvectors()};
  canonicalize_phases(out.vectors);
  return out;
}

EigenPairs smallest_eigenpairs(const CMatrix& s, int q) {
  if (s.rows() != s.cols()) {
    throw Error(ErrorKind::NotHermitian, "matrix " + dims(s) + " is not square");
  }
  if (q < 1 || q > s.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "q=" + std::to_string(q) + " outside [1, " + std::to_string(s.rows()) + "]");
  }
  EigenPairs all = hermitian_eigen(s);
  return {all.values.head(q), all.vectors.leftCols(q)};
}

CMatrix smallest_eigvecs(const CMatrix& s, int q) { return smallest_eigenpairs(s, q).vectors; }

void canonicalize_phases(CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double cn = m.col(j).norm();
    if (cn == 0.0) continue;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const double a = std::abs(m(i, j));
      if (a > 1e-12 * cn) {
        m.col(j) *= std::conj(m(i, j)) / a;
        m(i, j) = cplx(a, 0.0);
        break;
      }
    }
  }
}

CMatrix orthonormalize_columns(const CMatrix& a) {
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(a.rows(), a.cols());
  // Fix the phase so that the map a -> q is R with a positive real diagonal.
  const CMatrix r = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_gaussian(int rows, int cols, GaussianSource& src) {
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = src.complex_normal();
  }
  return m;
}

CMatrix random_orthonormal(int rows, int cols, GaussianSource& src) {
  return orthonormalize_columns(random_gaussian(rows, cols, src));
}

CMatrix vstack(const std::vector<CMatrix>& blocks, int cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "vstack block " + dims(b) + " vs width " + std::to_string(cols));
    }
    rows += b.rows();
  }
  CMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

CMatrix hstack(const std::vector<CMatrix>& blocks, int rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "hstack block " + dims(b) + " vs height " + std::to_string(rows));
    }
    cols += b.cols();
  }
  CMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace mcia
