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
#include <cstdint>
#include <random>
#include <utility>

#include "spooky/complex_matrix.hpp"
#include "spooky/quantum_state.hpp"

namespace spooky {

/// Seeded generators for test fixtures and the CLI demo. Amplitudes are
/// i.i.d. complex Gaussians, so states are uniform on the unit sphere.
class RandomStates {
 public:
  explicit RandomStates(std::uint64_t seed) : engine_(seed) {}

  ComplexScalar gaussian();
  ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols);

  StateVector state(std::size_t dim);
  BipartiteState bipartite(std::size_t dim_left, std::size_t dim_right);
  BipartiteState product(std::size_t dim_left, std::size_t dim_right);
  /// Haar-distributed unitary (QR of a Gaussian matrix with the phase fix).
  ComplexMatrix unitary(std::size_t dim);
  /// Projector onto the span of `rank` Haar-random orthonormal vectors.
  ProjectionMatrix projection(std::size_t dim, std::size_t rank);
  /// Projector of uniformly random rank in [0, dim].
  ProjectionMatrix projection(std::size_t dim);
  std::pair<StateVector, StateVector> orthonormal_pair(std::size_t dim);

  std::size_t uniform(std::size_t lo, std::size_t hi);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace spooky
