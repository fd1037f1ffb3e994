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

#include "spooky/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spooky/errors.hpp"

namespace spooky {
namespace {

ComplexScalar matrix_element(const StateVector& x, const ProjectionMatrix& p,
                             const StateVector& y) {
  return inner(x.amplitudes(), matvec(p.matrix(), y.amplitudes()));
}

void require_event_dims(const StateVector& alpha, const StateVector& beta,
                        const ProjectionMatrix& p, const ProjectionMatrix& q) {
  if (p.dim() != alpha.dim() || q.dim() != beta.dim()) {
    throw DimensionMismatch("scenario: event dimensions do not match the subsystems");
  }
}

ScenarioResult finish(ScenarioResult r) {
  r.changed = std::abs(r.before_probability - r.after_probability) > kChangeThreshold;
  return r;
}

}  // namespace

ScenarioResult run_product_scenario(const StateVector& alpha,
                                    const StateVector& beta,
                                    const ProjectionMatrix& p,
                                    const ProjectionMatrix& q) {
  require_event_dims(alpha, beta, p, q);
  const double alice = probability(alpha, p);
  if (alice <= kZeroProbability) {
    throw ZeroProbabilityEvent("Alice's event has probability " +
                               std::to_string(alice));
  }

  const auto gamma = tensor_state(alpha, beta);
  const auto bob_event = embed_right(alpha.dim(), q);
  const auto updated = collapse(gamma, embed_left(p, beta.dim()));

  ScenarioResult r;
  r.before_probability = probability(beta, q);
  r.after_probability = probability(updated, bob_event);
  r.alice_outcome_probability = alice;
  r.normalization = std::sqrt(alice);
  r.closed_form_residual =
      std::abs(probability(gamma, bob_event) - r.before_probability);
  return finish(r);
}

ScenarioResult run_entangled_scenario(const StateVector& alpha,
                                      const StateVector& beta,
                                      const ProjectionMatrix& p,
                                      const ProjectionMatrix& q) {
  if (alpha.dim() != beta.dim()) {
    throw DimensionMismatch("scenario: alpha and beta live in different spaces");
  }
  require_event_dims(alpha, beta, p, q);
  const auto delta = singlet(alpha, beta);

  const double p_aa = matrix_element(alpha, p, alpha).real();
  const double p_bb = matrix_element(beta, p, beta).real();
  const ComplexScalar p_ab = matrix_element(alpha, p, beta);
  const ComplexScalar p_ba = matrix_element(beta, p, alpha);
  const double q_aa = matrix_element(alpha, q, alpha).real();
  const double q_bb = matrix_element(beta, q, beta).real();
  const ComplexScalar q_ab = matrix_element(alpha, q, beta);
  const ComplexScalar q_ba = matrix_element(beta, q, alpha);

  const double n_squared = 0.5 * (p_aa + p_bb);
  if (n_squared <= kZeroProbability) {
    throw ZeroProbabilityEvent("Alice's event has probability " +
                               std::to_string(n_squared));
  }

  const double before_closed = 0.5 * (q_bb + q_aa);
  const ComplexScalar bracket =
      p_aa * q_bb - p_ab * q_ba - p_ba * q_ab + p_bb * q_aa;
  const double after_closed = bracket.real() / (2.0 * n_squared);

  const auto alice_event = embed_left(p, beta.dim());
  const auto bob_event = embed_right(alpha.dim(), q);
  const auto updated = collapse(delta, alice_event);

  ScenarioResult r;
  r.before_probability = probability(delta, bob_event);
  r.after_probability = probability(updated, bob_event);
  r.alice_outcome_probability = probability(delta, alice_event);
  r.normalization = std::sqrt(n_squared);
  r.closed_form_residual =
      std::max({std::abs(r.before_probability - before_closed),
                std::abs(r.after_probability - after_closed),
                std::abs(r.alice_outcome_probability - n_squared)});
  return finish(r);
}

}  // namespace spooky
