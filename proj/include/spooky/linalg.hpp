// Copyright 2026 The spooky Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "spooky/complex_matrix.hpp"

namespace spooky {

/// Spectrum of a Hermitian matrix. Eigenvalues are sorted descending; ties
/// keep the order in which the Jacobi iteration left them on the diagonal.
/// Column k of `eigenvectors` belongs to `eigenvalues[k]`.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver. Iterates until the off-diagonal Frobenius norm
/// is at most 1e-14 * ||H||_F or 100 sweeps have run.
///
/// Throws NotHermitian if `h` is not square or deviates from its adjoint by
/// more than 1e-10 * max(1, max|h_ij|) in any entry. Eigenvalues are returned
/// unclamped.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Singular value decomposition in the factor order C = U * D * V, with U
/// (m x m) and V (n x n) unitary and D the m x n diagonal matrix carrying
/// `singular_values` (length min(m, n), sorted descending).
///
/// Row i of V is the right singular vector paired with singular value i,
/// which is the adjoint of the more common C = U D V^* layout.
struct SVDResult {
  ComplexMatrix left_vectors;
  std::vector<double> singular_values;
  ComplexMatrix right_vectors;

  ComplexMatrix diagonal() const;
  ComplexMatrix reconstruct() const;
};

/// One-sided (Hestenes) cyclic Jacobi SVD. The rotations are the Jacobi
/// rotations that diagonalize C^* C, applied to the columns of C so that
/// C^* C is never formed; small singular values keep an absolute accuracy of
/// roughly machine epsilon times ||C||.
///
/// Left vectors for non-zero singular values are the normalized rotated
/// columns; the remaining columns of U are completed by Gram-Schmidt against
/// the standard basis. A zero matrix yields all-zero singular values.
SVDResult svd(const ComplexMatrix& c);

/// Singular values via the eigenvalues of C^* C (clamped at zero, then
/// square-rooted). Independent of `svd`; length min(m, n), descending.
std::vector<double> gram_singular_values(const ComplexMatrix& c);

/// Eigenvalues of C^* C in [-1e-12, 0) are treated as rounding and clamped.
inline constexpr double kEigenClampTolerance = 1e-12;

}  // namespace spooky
