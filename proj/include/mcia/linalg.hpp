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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "mcia/rng.hpp"

namespace mcia {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Default relative tolerance: singular values at or below tol * sigma_max count as zero.
inline constexpr double kDefaultTol = 1e-9;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
struct EigenPairs {
  RVector values;
  CMatrix vectors;
};

/// Number of singular values strictly above tol * sigma_max. Zero matrix has rank 0.
int numerical_rank(const CMatrix& a, double tol = kDefaultTol);

/// Orthonormal basis of ker(A). Width is cols - rank, or exactly q when given.
/// Throws EmptyNullSpace when q exceeds the null-space dimension.
CMatrix null_space_basis(const CMatrix& a, double tol = kDefaultTol);
CMatrix null_space_basis(const CMatrix& a, int q, double tol = kDefaultTol);

/// Moore-Penrose inverse through the SVD.
CMatrix pseudo_inverse(const CMatrix& a, double tol = kDefaultTol);

/// Orthonormal basis of range(A). Throws ZeroMatrix when A is zero.
CMatrix orthonormal_basis(const CMatrix& a, double tol = kDefaultTol);

/// Eigen-decomposition of a Hermitian matrix. Throws NotHermitian.
EigenPairs hermitian_eigen(const CMatrix& s);

/// Eigenvectors of the q smallest eigenvalues, ascending.
/// Throws NotHermitian or DimensionMismatch (q outside [1, n]).
CMatrix smallest_eigvecs(const CMatrix& s, int q);
EigenPairs smallest_eigenpairs(const CMatrix& s, int q);

/// Rotates each column so its first nonzero entry is real positive.
void canonicalize_phases(CMatrix& m);

/// Thin QR orthonormalization that keeps the column span and ordering.
CMatrix orthonormalize_columns(const CMatrix& a);

/// i.i.d. CN(0,1) matrix.
CMatrix random_gaussian(int rows, int cols, GaussianSource& src);

/// Orthonormalized Gaussian draw.
CMatrix random_orthonormal(int rows, int cols, GaussianSource& src);

/// Block helpers. An empty list gives a 0-row (or 0-col) matrix.
CMatrix vstack(const std::vector<CMatrix>& blocks, int cols);
CMatrix hstack(const std::vector<CMatrix>& blocks, int rows);

}  // namespace mcia
