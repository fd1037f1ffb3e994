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
#include <span>
#include <vector>

#include "spooky/complex_matrix.hpp"

namespace spooky {

/// Squared norms of states may deviate from 1 by at most this much.
inline constexpr double kNormTolerance = 1e-8;
/// Entrywise tolerance for P^2 = P = P^* and for unitarity checks.
inline constexpr double kOperatorTolerance = 1e-10;
/// Events with probability at or below this cannot be conditioned on.
inline constexpr double kZeroProbability = 1e-12;
/// Largest |<alpha, beta>| accepted as orthogonal.
inline constexpr double kOrthogonalityTolerance = 1e-10;

/// Unit vector of amplitudes over the standard basis of C^dim.
class StateVector {
 public:
  /// Throws NotNormalized unless | ||amplitudes||^2 - 1 | <= kNormTolerance.
  explicit StateVector(std::vector<ComplexScalar> amplitudes);

  /// Divides by the norm. Throws NotNormalized for a zero vector.
  static StateVector normalized(std::vector<ComplexScalar> amplitudes);
  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const ComplexScalar> amplitudes() const noexcept {
    return amplitudes_;
  }
  const ComplexScalar& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<ComplexScalar> amplitudes_;
};

/// Hermitian idempotent matrix: a yes/no event.
class ProjectionMatrix {
 public:
  /// Throws NotAProjection unless P^2 = P = P^* within kOperatorTolerance.
  explicit ProjectionMatrix(ComplexMatrix matrix);

  static ProjectionMatrix identity(std::size_t dim);
  static ProjectionMatrix zero(std::size_t dim);
  /// Rank-one projector x -> <v, x> v.
  static ProjectionMatrix onto(const StateVector& v);
  /// Orthogonal projector onto the span of the given orthonormal vectors.
  static ProjectionMatrix onto_span(std::span<const StateVector> orthonormal);

  /// I - P, the event that occurs exactly when P does not.
  ProjectionMatrix complement() const;

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  struct Trusted {};
  ProjectionMatrix(ComplexMatrix matrix, Trusted) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

/// Pure state of a two-part system, stored as the m x n coefficient matrix
/// C = [c_ij] of the expansion over products of standard basis vectors.
///
/// The amplitude of basis product (i, j) lives at flat index i * n + j
/// (row-major) whenever the state is viewed as a vector of length m * n;
/// embed_left/embed_right use the same layout.
class BipartiteState {
 public:
  /// Throws NotNormalized unless | sum |c_ij|^2 - 1 | <= kNormTolerance.
  explicit BipartiteState(ComplexMatrix coefficients);

  /// Scales the coefficients to unit norm. Throws NotNormalized for zero.
  static BipartiteState normalized(ComplexMatrix coefficients);
  static BipartiteState from_amplitudes(std::size_t dim_left,
                                        std::size_t dim_right,
                                        std::span<const ComplexScalar> flat);

  std::size_t dim_left() const noexcept { return coefficients_.rows(); }
  std::size_t dim_right() const noexcept { return coefficients_.cols(); }
  const ComplexMatrix& coefficients() const noexcept { return coefficients_; }

  /// Row-major flattening of the coefficients.
  std::span<const ComplexScalar> amplitudes() const noexcept {
    return coefficients_.entries();
  }
  StateVector as_vector() const;

 private:
  ComplexMatrix coefficients_;
};

/// Weighted left-subsystem states reproducing every left-local probability:
///   <gamma, (P (x) I) gamma> = sum_j weights[j] * <states[j], P states[j]>.
struct MixedStateReduction {
  std::vector<double> weights;
  std::vector<StateVector> states;
  /// Coefficient column each entry was read from (zero-weight columns are
  /// skipped).
  std::vector<std::size_t> columns;
};

/// <psi, P psi> before any rounding or clamping.
ComplexScalar expectation(std::span<const ComplexScalar> psi,
                          const ProjectionMatrix& p);

/// Probability that event P occurs in state psi, clamped to [0, 1].
/// Throws DimensionMismatch.
double probability(const StateVector& psi, const ProjectionMatrix& p);
double probability(const BipartiteState& gamma, const ProjectionMatrix& p);

/// State conditioned on P having occurred: P psi / ||P psi||.
/// Throws ZeroProbabilityEvent when ||P psi||^2 <= kZeroProbability.
StateVector collapse(const StateVector& psi, const ProjectionMatrix& p);
BipartiteState collapse(const BipartiteState& gamma, const ProjectionMatrix& p);

/// alpha (x) beta; coefficient matrix c_ij = alpha_i * beta_j.
BipartiteState tensor_state(const StateVector& alpha, const StateVector& beta);

/// P (x) I on C^m (x) C^dim_right.
ProjectionMatrix embed_left(const ProjectionMatrix& p, std::size_t dim_right);
/// I (x) Q on C^dim_left (x) C^n.
ProjectionMatrix embed_right(std::size_t dim_left, const ProjectionMatrix& q);

/// (alpha (x) beta - beta (x) alpha) / sqrt(2) for orthogonal alpha, beta.
/// Throws NonOrthogonalInput or DimensionMismatch.
BipartiteState singlet(const StateVector& alpha, const StateVector& beta);

/// Column-wise reduction: weights[j] = sum_i |c_ij|^2 and states[j] the
/// normalized column j. Columns with weight <= 1e-14 are omitted.
MixedStateReduction reduce_to_left_mixture(const BipartiteState& gamma);

/// sum_j weights[j] * <states[j], P states[j]>.
double mixture_probability(const MixedStateReduction& mixture,
                           const ProjectionMatrix& p);

/// Coefficients U * C * V^T, i.e. the state (U (x) V) gamma.
/// Throws NotUnitary or DimensionMismatch.
BipartiteState apply_local_unitary(const BipartiteState& gamma,
                                   const ComplexMatrix& u,
                                   const ComplexMatrix& v);

/// True if a = e^{i theta} b for some theta, within `tol` per amplitude.
bool equal_up_to_phase(std::span<const ComplexScalar> a,
                       std::span<const ComplexScalar> b, double tol);

}  // namespace spooky
