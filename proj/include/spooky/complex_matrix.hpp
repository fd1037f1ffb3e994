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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spooky {

using ComplexScalar = std::complex<double>;

/// Dense complex matrix stored row-major. Value type; all operations below
/// return new matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<ComplexScalar> entries);
  /// Nested-list construction, e.g. `{{1, 0}, {0, 2}}`. Rows must be equal
  /// length.
  ComplexMatrix(std::initializer_list<std::initializer_list<ComplexScalar>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  /// Column vector from amplitudes.
  static ComplexMatrix column(std::span<const ComplexScalar> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  ComplexScalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const ComplexScalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const ComplexScalar> entries() const noexcept { return entries_; }
  std::span<ComplexScalar> entries() noexcept { return entries_; }

  std::vector<ComplexScalar> column_vector(std::size_t j) const;
  std::vector<ComplexScalar> row_vector(std::size_t i) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ComplexScalar> entries_;
};

/// Throws DimensionMismatch when `a.cols() != b.rows()`.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, ComplexScalar factor);
/// Kronecker product; entry ((i*p + k), (j*q + l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Throws DimensionMismatch for non-square input.
ComplexScalar trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
/// max |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);
/// A * A^* = I within `tol` entrywise.
bool is_unitary(const ComplexMatrix& a, double tol);

// Vector helpers over coordinate space. The inner product is anti-linear in
// its first argument.
ComplexScalar inner(std::span<const ComplexScalar> x,
                    std::span<const ComplexScalar> y);
double norm(std::span<const ComplexScalar> x);
std::vector<ComplexScalar> matvec(const ComplexMatrix& a,
                                 std::span<const ComplexScalar> x);

}  // namespace spooky
