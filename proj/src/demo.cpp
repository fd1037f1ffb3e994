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

#include "spooky/demo.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "spooky/entanglement.hpp"
#include "spooky/errors.hpp"
#include "spooky/random_states.hpp"
#include "spooky/scenario.hpp"
#include "spooky/worked_examples.hpp"

namespace spooky {
namespace {

using namespace std::complex_literals;

class Checks {
 public:
  void near(const std::string& name, double expected, double computed,
            double tol) {
    add(name, expected, computed, tol, std::abs(expected - computed) <= tol);
  }

  void near(const std::string& name, ComplexScalar expected,
            ComplexScalar computed, double tol) {
    add(name, complex_to_json(expected), complex_to_json(computed), tol,
        std::abs(expected - computed) <= tol);
  }

  void at_most(const std::string& name, double bound, double computed) {
    Document c = Document::object();
    c["name"] = name;
    c["bound"] = bound;
    c["computed"] = computed;
    c["pass"] = computed <= bound;
    push(std::move(c));
  }

  // Informational value; always passes.
  void record(const std::string& name, double computed) {
    Document c = Document::object();
    c["name"] = name;
    c["computed"] = computed;
    c["pass"] = true;
    push(std::move(c));
  }

  template <typename T>
  void equal(const std::string& name, const T& expected, const T& computed) {
    add(name, expected, computed, Document(), expected == computed);
  }

  Document finish(std::string_view demo, std::string_view description) && {
    Document doc = Document::object();
    doc["demo"] = demo;
    doc["description"] = description;
    doc["checks"] = std::move(checks_);
    doc["pass"] = pass_;
    return doc;
  }

 private:
  void add(const std::string& name, Document expected, Document computed,
           Document tol, bool pass) {
    Document c = Document::object();
    c["name"] = name;
    c["expected"] = std::move(expected);
    c["computed"] = std::move(computed);
    if (!tol.is_null()) c["tolerance"] = std::move(tol);
    c["pass"] = pass;
    push(std::move(c));
  }

  void push(Document c) {
    pass_ = pass_ && c["pass"].get<bool>();
    checks_.push_back(std::move(c));
  }

  Document checks_ = Document::array();
  bool pass_ = true;
};

std::string verdict_of(const FactorizationVerdict& v) {
  return v.factorized ? "factorized" : "entangled";
}

double amplitude_gap(std::span<const ComplexScalar> a,
                     std::span<const ComplexScalar> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

Document example1(const DemoOptions& opt) {
  Checks checks;
  const auto delta = singlet(StateVector::basis(2, 0), StateVector::basis(2, 1));
  const auto verdict = factor_test(delta);
  checks.equal<std::string>("singlet(e1, e2) verdict", "entangled", verdict_of(verdict));
  checks.equal<std::string>("zero coefficient sum uses", "schmidt-fallback",
                            std::string(to_string(verdict.path)));
  checks.near("e(singlet(e1, e2))", 1.0 / std::sqrt(2.0),
              entanglement_number_schmidt(delta).entanglement_number, 1e-10);

  RandomStates rng(opt.seed);
  const auto [a, b] = rng.orthonormal_pair(opt.dim);
  const auto random_delta = singlet(a, b);
  checks.equal<std::string>("singlet of a random orthonormal pair", "entangled",
                            verdict_of(factor_test(random_delta)));
  checks.near("e(random singlet)", 1.0 / std::sqrt(2.0),
              entanglement_number_schmidt(random_delta).entanglement_number, 1e-10);
  return std::move(checks).finish(
      "example1", "antisymmetric combination of two orthogonal states is entangled");
}

Document example2(const DemoOptions&) {
  Checks checks;
  const auto psi = worked::product_3x3();
  const double scale = 10.0 * std::sqrt(7.0);
  const auto& c = psi.coefficients();
  ComplexScalar total{};
  std::vector<ComplexScalar> rows(3), cols(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      rows[i] += c(i, j) * scale;
      cols[j] += c(i, j) * scale;
      total += c(i, j) * scale;
    }
  }
  checks.near("N * sum c_ij", 6.0 * (3.0 - 1.0i), total, 1e-10);
  checks.near("N * row sum 1", 3.0 * (3.0 - 1.0i), rows[0], 1e-10);
  checks.near("N * row sum 2", 6.0 * (1.0i - 3.0), rows[1], 1e-10);
  checks.near("N * row sum 3", 9.0 * (3.0 - 1.0i), rows[2], 1e-10);
  checks.near("N * column sum 1", ComplexScalar{8.0}, cols[0], 1e-10);
  checks.near("N * column sum 2", -6.0i, cols[1], 1e-10);
  checks.near("N * column sum 3 (5 - 10 + 15)", ComplexScalar{10.0}, cols[2], 1e-10);
  const auto verdict = factor_test(psi);
  checks.equal<std::string>("verdict", "factorized", verdict_of(verdict));
  checks.at_most("criterion residual", verdict.residual_threshold, verdict.max_residual);
  return std::move(checks).finish(
      "example2", "row and column sums of a 3x3 state satisfy the product criterion");
}

Document example3(const DemoOptions&) {
  Checks checks;
  const auto verdict = factor_test(worked::product_3x3());
  checks.equal<std::string>("verdict", "factorized", verdict_of(verdict));
  if (verdict.factorized) {
    const double r14 = std::sqrt(14.0);
    const double r50 = 5.0 * std::sqrt(2.0);
    const std::vector<ComplexScalar> alpha{1.0 / r14, -2.0 / r14, 3.0 / r14};
    const std::vector<ComplexScalar> beta{4.0 / r50, -3.0i / r50, 5.0 / r50};
    checks.equal("left part = (1, -2, 3)/sqrt(14) up to phase", true,
                 equal_up_to_phase(verdict.local_left->amplitudes(), alpha, 1e-10));
    checks.equal("right part = (4, -3i, 5)/(5 sqrt 2) up to phase", true,
                 equal_up_to_phase(verdict.local_right->amplitudes(), beta, 1e-10));
    checks.at_most("canonical left part, max amplitude error", 1e-10,
                   amplitude_gap(verdict.local_left->amplitudes(), alpha));
  }
  return std::move(checks).finish("example3", "local parts of the 3x3 product state");
}

Document example4(const DemoOptions&) {
  Checks checks;
  const auto family = worked::diagonal_family();
  const char* names[] = {"alpha", "beta", "gamma", "delta"};
  const double expected_e[] = {1.0 / std::sqrt(2.0), std::sqrt(2.0 / 3.0),
                               std::sqrt(11.0 / 18.0), std::sqrt(30.0) / 9.0};
  const std::size_t expected_index[] = {2, 3, 3, 3};
  const bool expected_maximal[] = {true, true, false, false};
  double e[4];
  for (int k = 0; k < 4; ++k) {
    const auto report = entanglement_number_schmidt(family[k]);
    e[k] = report.entanglement_number;
    const std::string n = names[k];
    checks.near("e(" + n + ")", expected_e[k], e[k], 1e-10);
    checks.equal("index of " + n, expected_index[k], *report.schmidt_index);
    checks.equal("maximally entangled " + n, expected_maximal[k], *report.maximal);
  }
  checks.equal("ordering e(delta) < e(alpha) < e(gamma) < e(beta)", true,
               e[3] < e[0] && e[0] < e[2] && e[2] < e[1]);
  checks.near("bound at index 2", 1.0 / std::sqrt(2.0), max_entanglement_bound(2), 1e-15);
  checks.near("bound at index 3", std::sqrt(2.0 / 3.0), max_entanglement_bound(3), 1e-15);
  checks.near("peaked (99/100, 1/100): e ~ 0.14", 0.14,
              entanglement_number_schmidt(worked::peaked()).entanglement_number, 0.005);
  return std::move(checks).finish(
      "example4", "entanglement numbers of four diagonal states and their ordering");
}

Document example5(const DemoOptions&) {
  Checks checks;
  const auto psi = worked::product_2x2();
  const auto trace = entanglement_number_trace(psi);
  checks.near("tr(|C|^4)", 1.0, trace.trace_fourth_power, 1e-12);
  checks.equal("trace route verdict factorized", true, trace.factorized);
  const auto verdict = factor_test(psi);
  checks.equal<std::string>("verdict", "factorized", verdict_of(verdict));
  if (verdict.factorized) {
    const double r2 = std::sqrt(2.0);
    const double r5 = std::sqrt(5.0);
    const std::vector<ComplexScalar> alpha{1.0 / r2, 1.0 / r2};
    const std::vector<ComplexScalar> beta{1.0 / r5, -2.0i / r5};
    checks.equal("left part = (1, 1)/sqrt(2) up to phase", true,
                 equal_up_to_phase(verdict.local_left->amplitudes(), alpha, 1e-10));
    checks.equal("right part = (1, -2i)/sqrt(5) up to phase", true,
                 equal_up_to_phase(verdict.local_right->amplitudes(), beta, 1e-10));
    const auto rebuilt = tensor_state(*verdict.local_left, *verdict.local_right);
    checks.at_most("reconstruction error", 1e-10,
                   max_abs_diff(rebuilt.coefficients(), psi.coefficients()));
  }
  return std::move(checks).finish("example5", "trace criterion on a 2x2 product state");
}

Document example6(const DemoOptions&) {
  Checks checks;
  const auto psi = worked::entangled_2x2();
  const auto trace = entanglement_number_trace(psi);
  checks.near("tr(|C|^4)", 17.0 / 25.0, trace.trace_fourth_power, 1e-12);
  checks.near("e (trace route)", 2.0 * std::sqrt(2.0) / 5.0, trace.entanglement_number, 1e-10);
  checks.near("e (Schmidt route)", 2.0 * std::sqrt(2.0) / 5.0,
              entanglement_number_schmidt(psi).entanglement_number, 1e-10);
  checks.equal<std::string>("verdict", "entangled", verdict_of(factor_test(psi)));
  return std::move(checks).finish("example6", "trace route on an entangled 2x2 state");
}

Document example7(const DemoOptions&) {
  Checks checks;
  const auto psi = worked::symmetric_2x2();
  const auto c2 = abs_squared(psi.coefficients());
  const ComplexMatrix expected{{5.0 / 6, 2.0 / 6}, {2.0 / 6, 1.0 / 6}};
  checks.at_most("|C|^2 vs (1/6)[[5, 2], [2, 1]], max entry error", 1e-12,
                 max_abs_diff(c2, expected));
  const auto c4 = matmul(c2, c2);
  const ComplexMatrix expected4{{29.0 / 36, 12.0 / 36}, {12.0 / 36, 5.0 / 36}};
  checks.at_most("|C|^4 vs (1/36)[[29, 12], [12, 5]], max entry error", 1e-12,
                 max_abs_diff(c4, expected4));
  const auto trace = entanglement_number_trace(psi);
  checks.near("tr(|C|^4)", 17.0 / 18.0, trace.trace_fourth_power, 1e-12);
  checks.near("e", 1.0 / (3.0 * std::sqrt(2.0)), trace.entanglement_number, 1e-10);
  return std::move(checks).finish("example7", "|C|^4 computed directly");
}

Document action_at_a_distance(const DemoOptions& opt) {
  Checks checks;
  const auto alpha = StateVector::basis(2, 0);
  const auto beta = StateVector::basis(2, 1);
  const auto p_alpha = ProjectionMatrix::onto(alpha);

  const auto entangled = run_entangled_scenario(alpha, beta, p_alpha, p_alpha);
  checks.near("entangled: before (P = Q = P_alpha)", 0.5, entangled.before_probability, 1e-12);
  checks.near("entangled: after (P = Q = P_alpha)", 0.0, entangled.after_probability, 1e-12);
  checks.near("entangled: N^2", 0.5,
              entangled.normalization * entangled.normalization, 1e-12);
  checks.equal("entangled: Bob's statistics changed", true, entangled.changed);

  const auto product = run_product_scenario(alpha, beta, p_alpha, p_alpha);
  checks.near("product: before (P = Q = P_alpha)", 0.0, product.before_probability, 1e-12);
  checks.near("product: after (P = Q = P_alpha)", 0.0, product.after_probability, 1e-12);

  RandomStates rng(opt.seed);
  const auto [a, b] = rng.orthonormal_pair(opt.dim);
  const auto p = rng.projection(opt.dim, 1);
  const auto q = rng.projection(opt.dim, 1);
  const auto random_product = run_product_scenario(a, b, p, q);
  checks.at_most("random product: |before - after|", 1e-10,
                 std::abs(random_product.before_probability -
                          random_product.after_probability));
  const auto random_entangled = run_entangled_scenario(a, b, p, q);
  checks.at_most("random entangled: closed form vs collapse pipeline", 1e-10,
                 random_entangled.closed_form_residual);
  checks.record("random entangled: before", random_entangled.before_probability);
  checks.record("random entangled: after", random_entangled.after_probability);
  const auto complement = run_entangled_scenario(a, b, p.complement(), q);
  checks.at_most("random entangled, Alice sees P': closed form residual", 1e-10,
                 complement.closed_form_residual);
  return std::move(checks).finish(
      "action-at-a-distance",
      "Bob's statistics before and after Alice conditions on her event");
}

using DemoFn = Document (*)(const DemoOptions&);

const std::vector<std::pair<std::string_view, DemoFn>>& registry() {
  static const std::vector<std::pair<std::string_view, DemoFn>> demos{
      {"example1", example1},
      {"example2", example2},
      {"example3", example3},
      {"example4", example4},
      {"example5", example5},
      {"example6", example6},
      {"example7", example7},
      {"action-at-a-distance", action_at_a_distance},
  };
  return demos;
}

}  // namespace

const std::vector<std::string_view>& demo_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Document run_demo(std::string_view name, const DemoOptions& options) {
  if (options.dim < 2) throw InvalidArgument("demo dimension must be at least 2");
  if (name == "all") {
    Document doc = Document::object();
    doc["demos"] = Document::array();
    bool pass = true;
    for (const auto& [demo, fn] : registry()) {
      auto one = fn(options);
      pass = pass && one["pass"].get<bool>();
      doc["demos"].push_back(std::move(one));
    }
    doc["pass"] = pass;
    return doc;
  }
  for (const auto& [demo, fn] : registry()) {
    if (demo == name) return fn(options);
  }
  throw InvalidArgument("unknown demo '" + std::string(name) + "'");
}

}  // namespace spooky
