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

#include "spooky/quantum_state.hpp"

namespace spooky {

/// Statistics of Bob's event Q before and after Alice confirms her event P.
struct ScenarioResult {
  /// Probability of I (x) Q in the prepared state.
  double before_probability = 0.0;
  /// Probability of I (x) Q once the state is conditioned on P (x) I.
  double after_probability = 0.0;
  /// N = ||(P (x) I) gamma||.
  double normalization = 0.0;
  /// Probability that Alice's event occurs; equals N^2.
  double alice_outcome_probability = 0.0;
  /// Largest gap between the generic collapse-then-measure pipeline and the
  /// closed-form expressions for the before/after probabilities.
  double closed_form_residual = 0.0;
  /// |before - after| > kChangeThreshold.
  bool changed = false;
};

inline constexpr double kChangeThreshold = 1e-10;

/// Prepared state alpha (x) beta. Bob's statistics are <beta, Q beta> both
/// before and after Alice's measurement.
///
/// Throws ZeroProbabilityEvent when <alpha, P alpha> <= kZeroProbability and
/// DimensionMismatch when P or Q does not fit its subsystem.
ScenarioResult run_product_scenario(const StateVector& alpha,
                                    const StateVector& beta,
                                    const ProjectionMatrix& p,
                                    const ProjectionMatrix& q);

/// Prepared state (alpha (x) beta - beta (x) alpha) / sqrt(2) for orthogonal
/// alpha, beta. Closed forms:
///   before = (<beta, Q beta> + <alpha, Q alpha>) / 2
///   N^2    = (<alpha, P alpha> + <beta, P beta>) / 2
///   after  = ( <alpha,P alpha><beta,Q beta> - <alpha,P beta><beta,Q alpha>
///            - <beta,P alpha><alpha,Q beta> + <beta,P beta><alpha,Q alpha> )
///            / (2 N^2)
///
/// Throws NonOrthogonalInput, ZeroProbabilityEvent or DimensionMismatch.
ScenarioResult run_entangled_scenario(const StateVector& alpha,
                                      const StateVector& beta,
                                      const ProjectionMatrix& p,
                                      const ProjectionMatrix& q);

}  // namespace spooky
