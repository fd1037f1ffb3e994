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

#include "spooky/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spooky/errors.hpp"

namespace spooky {
namespace {

constexpr double kDroppedColumnWeight = 1e-14;

double squared_norm(std::span<const ComplexScalar> x) {
  double sum = 0.0;
  for (const auto& z : x) sum += std::norm(z);
  return sum;
}

void require_unit(double squared, const char* what) {
  if (!(std::abs(squared - 1.0) <= kNormTolerance)) {
    throw NotNormalized(std::string(what) + " has squared norm " +
                        std::to_string(squared));
  }
}

void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " +
                            std::to_string(expected) + ", got " +
                            std::to_string(actual));
  }
}

}  // namespace

StateVector::StateVector(std::vector<ComplexScalar> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  require_unit(squared_norm(amplitudes_), "state vector");
}

StateVector StateVector::normalized(std::vector<ComplexScalar> amplitudes) {
  const double n = norm(amplitudes);
  if (n == 0.0 || !std::isfinite(n)) {
    throw NotNormalized("cannot normalize a zero or non-finite vector");
  }
  for (auto& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionMismatch("basis index " + std::to_string(index) +
                            " out of range for dimension " +
                            std::to_string(dim));
  }
  std::vector<ComplexScalar> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

ProjectionMatrix::ProjectionMatrix(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw NotAProjection("projection must be square");
  if (!is_hermitian(matrix_, kOperatorTolerance)) {
    throw NotAProjection("projection is not self-adjoint");
  }
  if (max_abs_diff(matmul(matrix_, matrix_), matrix_) > kOperatorTolerance) {
    throw NotAProjection("projection is not idempotent");
  }
}

ProjectionMatrix ProjectionMatrix::identity(std::size_t dim) {
  return {ComplexMatrix::identity(dim), Trusted{}};
}

ProjectionMatrix ProjectionMatrix::zero(std::size_t dim) {
  return {ComplexMatrix(dim, dim), Trusted{}};
}

ProjectionMatrix ProjectionMatrix::onto(const StateVector& v) {
  const std::size_t n = v.dim();
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
  }
  return ProjectionMatrix(std::move(p));
}

ProjectionMatrix ProjectionMatrix::onto_span(
    std::span<const StateVector> orthonormal) {
  if (orthonormal.empty()) {
    throw NotAProjection("onto_span needs at least one vector");
  }
  const std::size_t n = orthonormal.front().dim();
  ComplexMatrix p(n, n);
  for (const auto& v : orthonormal) {
    require_dim(n, v.dim(), "onto_span");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(i, j) += v[i] * std::conj(v[j]);
    }
  }
  return ProjectionMatrix(std::move(p));
}

ProjectionMatrix ProjectionMatrix::complement() const {
  return {subtract(ComplexMatrix::identity(dim()), matrix_), Trusted{}};
}

BipartiteState::BipartiteState(ComplexMatrix coefficients)
    : coefficients_(std::move(coefficients)) {
  require_unit(squared_norm(coefficients_.entries()), "bipartite state");
}

BipartiteState BipartiteState::normalized(ComplexMatrix coefficients) {
  const double n = frobenius_norm(coefficients);
  if (n == 0.0 || !std::isfinite(n)) {
    throw NotNormalized("cannot normalize a zero or non-finite coefficient matrix");
  }
  return BipartiteState(scale(coefficients, 1.0 / n));
}

BipartiteState BipartiteState::from_amplitudes(
    std::size_t dim_left, std::size_t dim_right,
    std::span<const ComplexScalar> flat) {
  return BipartiteState(ComplexMatrix(
      dim_left, dim_right, std::vector<ComplexScalar>(flat.begin(), flat.end())));
}

StateVector BipartiteState::as_vector() const {
  auto flat = amplitudes();
  return StateVector(std::vector<ComplexScalar>(flat.begin(), flat.end()));
}

ComplexScalar expectation(std::span<const ComplexScalar> psi,
                          const ProjectionMatrix& p) {
  require_dim(p.dim(), psi.size(), "expectation");
  return inner(psi, matvec(p.matrix(), psi));
}

double probability(const StateVector& psi, const ProjectionMatrix& p) {
  return std::clamp(expectation(psi.amplitudes(), p).real(), 0.0, 1.0);
}

double probability(const BipartiteState& gamma, const ProjectionMatrix& p) {
  return std::clamp(expectation(gamma.amplitudes(), p).real(), 0.0, 1.0);
}

StateVector collapse(const StateVector& psi, const ProjectionMatrix& p) {
  require_dim(p.dim(), psi.dim(), "collapse");
  auto projected = matvec(p.matrix(), psi.amplitudes());
  const double weight = squared_norm(projected);
  if (weight <= kZeroProbability) {
    throw ZeroProbabilityEvent("event has probability " +
                               std::to_string(weight) +
                               "; the state cannot be conditioned on it");
  }
  return StateVector::normalized(std::move(projected));
}

BipartiteState collapse(const BipartiteState& gamma,
                        const ProjectionMatrix& p) {
  const auto updated = collapse(gamma.as_vector(), p);
  return BipartiteState::from_amplitudes(gamma.dim_left(), gamma.dim_right(),
                                         updated.amplitudes());
}

BipartiteState tensor_state(const StateVector& alpha,
                            const StateVector& beta) {
  ComplexMatrix c(alpha.dim(), beta.dim());
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    for (std::size_t j = 0; j < beta.dim(); ++j) c(i, j) = alpha[i] * beta[j];
  }
  return BipartiteState::normalized(std::move(c));
}

ProjectionMatrix embed_left(const ProjectionMatrix& p, std::size_t dim_right) {
  return ProjectionMatrix(kron(p.matrix(), ComplexMatrix::identity(dim_right)));
}

ProjectionMatrix embed_right(std::size_t dim_left, const ProjectionMatrix& q) {
  return ProjectionMatrix(kron(ComplexMatrix::identity(dim_left), q.matrix()));
}

BipartiteState singlet(const StateVector& alpha, const StateVector& beta) {
  require_dim(alpha.dim(), beta.dim(), "singlet");
  const double overlap = std::abs(inner(alpha.amplitudes(), beta.amplitudes()));
  if (overlap > kOrthogonalityTolerance) {
    throw NonOrthogonalInput("singlet needs orthogonal states; |<alpha, beta>| = " +
                             std::to_string(overlap));
  }
  const std::size_t d = alpha.dim();
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      c(i, j) = r * (alpha[i] * beta[j] - beta[i] * alpha[j]);
    }
  }
  return BipartiteState::normalized(std::move(c));
}

MixedStateReduction reduce_to_left_mixture(const BipartiteState& gamma) {
  const auto& c = gamma.coefficients();
  MixedStateReduction out;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    auto column = c.column_vector(j);
    const double weight = squared_norm(column);
    if (weight <= kDroppedColumnWeight) continue;
    const double n = std::sqrt(weight);
    for (auto& z : column) z /= n;
    out.weights.push_back(weight);
    out.states.emplace_back(std::move(column));
    out.columns.push_back(j);
  }
  return out;
}

double mixture_probability(const MixedStateReduction& mixture,
                           const ProjectionMatrix& p) {
  double sum = 0.0;
  for (std::size_t k = 0; k < mixture.states.size(); ++k) {
    sum += mixture.weights[k] * expectation(mixture.states[k].amplitudes(), p).real();
  }
  return sum;
}

BipartiteState apply_local_unitary(const BipartiteState& gamma,
                                   const ComplexMatrix& u,
                                   const ComplexMatrix& v) {
  require_dim(gamma.dim_left(), u.rows(), "apply_local_unitary (left)");
  require_dim(gamma.dim_right(), v.rows(), "apply_local_unitary (right)");
  if (!is_unitary(u, kOperatorTolerance)) {
    throw NotUnitary("left operator is not unitary");
  }
  if (!is_unitary(v, kOperatorTolerance)) {
    throw NotUnitary("right operator is not unitary");
  }
  return BipartiteState(
      matmul(matmul(u, gamma.coefficients()), transpose(v)));
}

bool equal_up_to_phase(std::span<const ComplexScalar> a,
                       std::span<const ComplexScalar> b, double tol) {
  if (a.size() != b.size()) return false;
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (std::abs(b[k]) > std::abs(b[pivot])) pivot = k;
  }
  ComplexScalar phase{1.0, 0.0};
  if (!b.empty()) {
    const ComplexScalar ratio = a[pivot] * std::conj(b[pivot]);
    if (std::abs(ratio) > 0.0) phase = ratio / std::abs(ratio);
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - phase * b[k]) > tol) return false;
  }
  return true;
}

}  // namespace spooky
