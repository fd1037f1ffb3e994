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
#include <optional>
#include <string_view>
#include <vector>

#include "spooky/complex_matrix.hpp"
#include "spooky/quantum_state.hpp"

namespace spooky {

/// Numerical cutoffs that callers may tune. The defaults are the ones every
/// test and the CLI use unless overridden.
struct Tolerances {
  /// Product-criterion check passes when every
  /// |c_ij * c - rowsum_i * colsum_j| <= factor_residual * (1 + |c| * max|c_ij|),
  /// with c the sum of all coefficients.
  double factor_residual = 1e-9;
  /// A singular value counts toward the Schmidt index iff it exceeds
  /// rank * (largest singular value).
  double rank = 1e-10;
};

/// Below this |sum c_ij| the product criterion does not apply and the
/// Schmidt-rank test decides instead.
inline constexpr double kDegenerateCoefficientSum = 1e-10;
/// Local parts must rebuild the state to within this Frobenius distance.
inline constexpr double kReconstructionTolerance = 1e-8;
/// |lambda_i - 1/r| allowed for a maximally entangled state.
inline constexpr double kMaximalTolerance = 1e-8;
/// Trace route declares a product state when |1 - tr(|C|^4)| is below this.
inline constexpr double kTraceUnitTolerance = 1e-12;

/// psi = sum_i coefficients[i] * left_states[i] (x) right_states[i].
///
/// Coefficients are the retained singular values of C, sorted descending.
/// The first entry of each left state with modulus above 1e-12 is real and
/// positive; the compensating phase sits on the matching right state.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<StateVector> left_states;
  std::vector<StateVector> right_states;

  std::size_t index() const noexcept { return coefficients.size(); }
  /// lambda_i = coefficients[i]^2, rescaled so the entries sum to exactly 1
  /// up to rounding.
  std::vector<double> distribution() const;
  ComplexMatrix reconstruct() const;
};

enum class FactorPath {
  /// Closed-form row/column-sum criterion.
  criterion,
  /// Coefficient sum vanished (or the criterion's local parts did not rebuild
  /// the state); decided by Schmidt index == 1.
  schmidt_fallback,
};

std::string_view to_string(FactorPath path);

struct FactorizationVerdict {
  bool factorized = false;
  std::optional<StateVector> local_left;
  std::optional<StateVector> local_right;
  /// Largest |c_ij * c - rowsum_i * colsum_j| over all (i, j).
  double max_residual = 0.0;
  /// Threshold the residual was compared against.
  double residual_threshold = 0.0;
  ComplexScalar coefficient_sum{};
  FactorPath path = FactorPath::criterion;
};

enum class EntanglementMethod { schmidt, trace };

std::string_view to_string(EntanglementMethod method);

/// Entanglement number e(psi) = sqrt(1 - sum lambda_i^2) plus context.
///
/// The trace route never looks at the Schmidt spectrum, so it leaves the
/// Schmidt-only fields empty.
struct EntanglementReport {
  EntanglementMethod method = EntanglementMethod::schmidt;
  double entanglement_number = 0.0;
  /// tr(|C|^4) = sum lambda_i^2.
  double trace_fourth_power = 1.0;
  bool factorized = true;

  std::optional<std::size_t> schmidt_index;
  std::vector<double> distribution;
  std::optional<double> upper_bound;
  std::optional<bool> maximal;
  /// Largest spread between sqrt(1 - sum l^2), sqrt(sum_{i!=j} l_i l_j) and
  /// sqrt(sum l_i (1 - l_i)).
  std::optional<double> form_discrepancy;
};

/// Decides whether gamma = alpha (x) beta using row and column sums of the
/// coefficient matrix, and returns the local parts when it is. Falls back to
/// the Schmidt index when the coefficient sum is (numerically) zero.
FactorizationVerdict factor_test(const BipartiteState& gamma,
                                 const Tolerances& tol = {});

SchmidtDecomposition schmidt_decompose(const BipartiteState& gamma,
                                       const Tolerances& tol = {});

/// e(psi) from the Schmidt distribution. Reported value uses the pairwise
/// form sqrt(sum_{i!=j} lambda_i lambda_j), which does not cancel for nearly
/// product states.
EntanglementReport entanglement_number_schmidt(const BipartiteState& gamma,
                                               const Tolerances& tol = {});
EntanglementReport entanglement_number_schmidt(const SchmidtDecomposition& schmidt);

/// e(psi) = sqrt(max(0, 1 - tr(|C|^4))) without any decomposition. When the
/// defect is below 1e-6 it is recomputed as twice the sum of squared 2x2
/// minors of C, an identity that avoids the cancellation near 1.
EntanglementReport entanglement_number_trace(const BipartiteState& gamma);

/// |C|^2 = C^* C.
ComplexMatrix abs_squared(const ComplexMatrix& c);

/// tr(|C|^4) as the sum of |G_rs|^2 over the row Gram matrix G = C C^*.
double trace_abs_fourth(const ComplexMatrix& c);

/// sqrt((r - 1) / r), the largest entanglement number at Schmidt index r.
/// Throws InvalidArgument for r == 0.
double max_entanglement_bound(std::size_t r);

/// Schmidt index >= 2 and every lambda_i within kMaximalTolerance of 1/r.
bool is_maximally_entangled(const BipartiteState& gamma,
                            const Tolerances& tol = {});

}  // namespace spooky
