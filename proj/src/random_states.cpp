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

#include "spooky/random_states.hpp"

#include <cmath>
#include <vector>

namespace spooky {

ComplexScalar RandomStates::gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

ComplexMatrix RandomStates::gaussian_matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix out(rows, cols);
  for (auto& z : out.entries()) z = gaussian();
  return out;
}

StateVector RandomStates::state(std::size_t dim) {
  std::vector<ComplexScalar> amps(dim);
  for (auto& z : amps) z = gaussian();
  return StateVector::normalized(std::move(amps));
}

BipartiteState RandomStates::bipartite(std::size_t dim_left,
                                       std::size_t dim_right) {
  return BipartiteState::normalized(gaussian_matrix(dim_left, dim_right));
}

BipartiteState RandomStates::product(std::size_t dim_left,
                                     std::size_t dim_right) {
  const auto a = state(dim_left);
  const auto b = state(dim_right);
  return tensor_state(a, b);
}

ComplexMatrix RandomStates::unitary(std::size_t dim) {
  auto z = gaussian_matrix(dim, dim);
  // Modified Gram-Schmidt on the columns. Dividing by the positive norm is
  // the R-diagonal phase fix that makes the result Haar.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        ComplexScalar overlap{};
        for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(z(i, k)) * z(i, j);
        for (std::size_t i = 0; i < dim; ++i) z(i, j) -= overlap * z(i, k);
      }
    }
    double n = 0.0;
    for (std::size_t i = 0; i < dim; ++i) n += std::norm(z(i, j));
    n = std::sqrt(n);
    for (std::size_t i = 0; i < dim; ++i) z(i, j) /= n;
  }
  return z;
}

ProjectionMatrix RandomStates::projection(std::size_t dim, std::size_t rank) {
  if (rank == 0) return ProjectionMatrix::zero(dim);
  const auto u = unitary(dim);
  std::vector<StateVector> basis;
  for (std::size_t k = 0; k < rank && k < dim; ++k) {
    basis.emplace_back(u.column_vector(k));
  }
  return ProjectionMatrix::onto_span(basis);
}

ProjectionMatrix RandomStates::projection(std::size_t dim) {
  return projection(dim, uniform(0, dim));
}

std::pair<StateVector, StateVector> RandomStates::orthonormal_pair(
    std::size_t dim) {
  const auto u = unitary(dim);
  return {StateVector(u.column_vector(0)), StateVector(u.column_vector(1))};
}

std::size_t RandomStates::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

}  // namespace spooky
