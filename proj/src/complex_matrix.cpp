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

#include "spooky/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spooky/errors.hpp"

namespace spooky {
namespace {

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " +
                            shape(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<ComplexScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " given " +
                            std::to_string(entries_.size()) + " entries");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<ComplexScalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::column(std::span<const ComplexScalar> values) {
  return ComplexMatrix(values.size(), 1,
                       std::vector<ComplexScalar>(values.begin(), values.end()));
}

std::vector<ComplexScalar> ComplexMatrix::column_vector(std::size_t j) const {
  std::vector<ComplexScalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<ComplexScalar> ComplexMatrix::row_vector(std::size_t i) const {
  auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape(a) + " * " + shape(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const ComplexScalar aik = a(i, k);
      if (aik == ComplexScalar{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

ComplexMatrix scale(const ComplexMatrix& a, ComplexScalar factor) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z *= factor;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ComplexScalar aij = a(i, j);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < q; ++l) {
          out(i * p + k, j * q + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexScalar trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("trace of " + shape(a));
  ComplexScalar sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    worst = std::max(worst, std::abs(x[k] - y[k]));
  }
  return worst;
}

double max_abs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (const auto& z : a.entries()) worst = std::max(worst, std::abs(z));
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(matmul(a, adjoint(a)),
                      ComplexMatrix::identity(a.rows())) <= tol;
}

ComplexScalar inner(std::span<const ComplexScalar> x,
                    std::span<const ComplexScalar> y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("inner product of lengths " +
                            std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
  ComplexScalar sum{};
  for (std::size_t k = 0; k < x.size(); ++k) sum += std::conj(x[k]) * y[k];
  return sum;
}

double norm(std::span<const ComplexScalar> x) {
  double sum = 0.0;
  for (const auto& z : x) sum += std::norm(z);
  return std::sqrt(sum);
}

std::vector<ComplexScalar> matvec(const ComplexMatrix& a,
                                 std::span<const ComplexScalar> x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("matvec: " + shape(a) + " to vector of length " +
                            std::to_string(x.size()));
  }
  std::vector<ComplexScalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ComplexScalar sum{};
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

}  // namespace spooky
