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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "spooky/entanglement.hpp"
#include "spooky/errors.hpp"
#include "spooky/random_states.hpp"
#include "spooky/worked_examples.hpp"
#include "test_support.hpp"

using namespace spooky;
using namespace std::complex_literals;
using spooky::testing::close;
using spooky::testing::loop_product;

namespace {

BipartiteState normalized(ComplexMatrix c) { return BipartiteState::normalized(std::move(c)); }

BipartiteState diagonal_state(std::initializer_list<double> lambda) {
  ComplexMatrix c(lambda.size(), lambda.size());
  std::size_t k = 0;
  for (double l : lambda) {
    c(k, k) = std::sqrt(l);
    ++k;
  }
  return BipartiteState(std::move(c));
}

// sqrt(1 - sum lambda^2) straight from the definition.
double e_from_distribution(std::initializer_list<double> lambda) {
  double s = 0.0;
  for (double l : lambda) s += l * l;
  return std::sqrt(1.0 - s);
}

// tr((C C^*)^2) via triple-loop products.
double trace_oracle(const ComplexMatrix& c) {
  const auto g = loop_product(c, adjoint(c));
  const auto g2 = loop_product(g, g);
  ComplexScalar t{};
  for (std::size_t i = 0; i < g2.rows(); ++i) t += g2(i, i);
  return t.real();
}

// 1 - tr(|C|^4) for unit C, expanded over every ordered pair of rows and
// columns: sum over r != s, k != l of |c_rk c_sl - c_rl c_sk|^2 / 2.
double minor_oracle(const ComplexMatrix& c) {
  double s = 0.0;
  for (std::size_t r = 0; r < c.rows(); ++r) {
    for (std::size_t q = 0; q < c.rows(); ++q) {
      for (std::size_t k = 0; k < c.cols(); ++k) {
        for (std::size_t l = 0; l < c.cols(); ++l) {
          s += std::norm(c(r, k) * c(q, l) - c(r, l) * c(q, k));
        }
      }
    }
  }
  return 0.5 * s;
}

}  // namespace

TEST_CASE("three-by-three product state and its local parts") {
  const auto gamma = normalized(ComplexMatrix{
      {4.0, -3.0i, 5.0}, {-8.0, 6.0i, -10.0}, {12.0, -9.0i, 15.0}});
  CHECK(close(gamma.coefficients()(0, 0), 4.0 / (10.0 * std::sqrt(7.0)), 1e-15));

  const auto verdict = factor_test(gamma);
  CHECK(verdict.factorized);
  CHECK(verdict.path == FactorPath::criterion);
  REQUIRE(verdict.local_left.has_value());
  REQUIRE(verdict.local_right.has_value());

  const double a = 1.0 / std::sqrt(14.0);
  const double b = 1.0 / (5.0 * std::sqrt(2.0));
  const std::vector<ComplexScalar> left{a, -2.0 * a, 3.0 * a};
  const std::vector<ComplexScalar> right{4.0 * b, -3.0i * b, 5.0 * b};
  CHECK(equal_up_to_phase(verdict.local_left->amplitudes(), left, 1e-10));
  CHECK(equal_up_to_phase(verdict.local_right->amplitudes(), right, 1e-10));
  // Canonical phase puts the first left entry on the positive real axis.
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(close((*verdict.local_left)[i], left[i], 1e-10));
    CHECK(close((*verdict.local_right)[i], right[i], 1e-10));
  }
}

TEST_CASE("two-by-two product state") {
  const auto gamma = normalized(ComplexMatrix{{1.0, -2.0i}, {1.0, -2.0i}});
  CHECK(close(trace_abs_fourth(gamma.coefficients()), 1.0, 1e-12));
  const auto verdict = factor_test(gamma);
  CHECK(verdict.factorized);
  REQUIRE(verdict.local_left.has_value());
  const auto rebuilt = tensor_state(*verdict.local_left, *verdict.local_right);
  CHECK(max_abs_diff(rebuilt.coefficients(), gamma.coefficients()) <= 1e-10);

  const auto report = entanglement_number_schmidt(gamma);
  CHECK(report.factorized);
  CHECK(report.entanglement_number <= 1e-12);
  CHECK(report.schmidt_index == 1);
  CHECK(entanglement_number_trace(gamma).factorized);
}

TEST_CASE("two-by-two entangled state") {
  const auto gamma = normalized(ComplexMatrix{{1.0, -2.0i}, {1.0, 2.0i}});
  CHECK_FALSE(factor_test(gamma).factorized);

  const auto g = abs_squared(gamma.coefficients());
  CHECK(close(g(0, 0), 0.2, 1e-12));
  CHECK(close(g(0, 1), 0.0, 1e-12));
  CHECK(close(g(1, 0), 0.0, 1e-12));
  CHECK(close(g(1, 1), 0.8, 1e-12));

  CHECK(close(trace_abs_fourth(gamma.coefficients()), 17.0 / 25.0, 1e-12));
  const double expected = 2.0 * std::sqrt(2.0) / 5.0;
  CHECK(close(entanglement_number_schmidt(gamma).entanglement_number, expected, 1e-10));
  CHECK(close(entanglement_number_trace(gamma).entanglement_number, expected, 1e-10));
  CHECK(close(expected, 0.565685424949, 1e-12));
  CHECK(entanglement_number_schmidt(gamma).schmidt_index == 2);
}

TEST_CASE("symmetric real state") {
  const auto gamma = normalized(ComplexMatrix{{3.0, 1.0}, {1.0, 1.0}});
  const auto g = abs_squared(gamma.coefficients());
  const ComplexMatrix expected{{5.0 / 6, 2.0 / 6}, {2.0 / 6, 1.0 / 6}};
  CHECK(max_abs_diff(g, expected) <= 1e-12);
  CHECK(close(trace_abs_fourth(gamma.coefficients()), 17.0 / 18.0, 1e-12));
  const double e = 1.0 / (3.0 * std::sqrt(2.0));
  CHECK(close(entanglement_number_schmidt(gamma).entanglement_number, e, 1e-10));
  CHECK(close(entanglement_number_trace(gamma).entanglement_number, e, 1e-10));
  CHECK_FALSE(factor_test(gamma).factorized);
}

TEST_CASE("diagonal family ordering and maximality") {
  const auto alpha = diagonal_state({1.0 / 2, 1.0 / 2});
  const auto beta = diagonal_state({1.0 / 3, 1.0 / 3, 1.0 / 3});
  const auto gamma = diagonal_state({1.0 / 2, 1.0 / 3, 1.0 / 6});
  const auto delta = diagonal_state({1.0 / 9, 1.0 / 9, 7.0 / 9});

  const double ea = entanglement_number_schmidt(alpha).entanglement_number;
  const double eb = entanglement_number_schmidt(beta).entanglement_number;
  const double eg = entanglement_number_schmidt(gamma).entanglement_number;
  const double ed = entanglement_number_schmidt(delta).entanglement_number;

  CHECK(close(ea, e_from_distribution({0.5, 0.5}), 1e-10));
  CHECK(close(ea, 1.0 / std::sqrt(2.0), 1e-10));
  CHECK(close(eb, std::sqrt(2.0 / 3.0), 1e-10));
  CHECK(close(eg, std::sqrt(11.0 / 18.0), 1e-10));
  CHECK(close(eg, e_from_distribution({1.0 / 2, 1.0 / 3, 1.0 / 6}), 1e-10));
  CHECK(close(ed, std::sqrt(30.0) / 9.0, 1e-10));
  CHECK(close(ed, e_from_distribution({1.0 / 9, 1.0 / 9, 7.0 / 9}), 1e-10));
  CHECK(ed < ea);
  CHECK(ea < eg);
  CHECK(eg < eb);

  CHECK(is_maximally_entangled(alpha));
  CHECK(is_maximally_entangled(beta));
  CHECK_FALSE(is_maximally_entangled(gamma));
  CHECK_FALSE(is_maximally_entangled(delta));
  CHECK(entanglement_number_schmidt(alpha).schmidt_index == 2);
  CHECK(entanglement_number_schmidt(beta).schmidt_index == 3);
  CHECK(entanglement_number_schmidt(alpha).maximal == true);
  CHECK(entanglement_number_schmidt(gamma).maximal == false);
}

TEST_CASE("peaked distribution") {
  const auto gamma = diagonal_state({0.99, 0.01});
  const double e = entanglement_number_schmidt(gamma).entanglement_number;
  CHECK(close(e, std::sqrt(198.0) / 100.0, 1e-12));
  CHECK(close(e, 0.14, 0.005));
}

TEST_CASE("worked example builders match the literals") {
  CHECK(max_abs_diff(worked::entangled_2x2().coefficients(),
                     normalized(ComplexMatrix{{1.0, -2.0i}, {1.0, 2.0i}}).coefficients()) == 0.0);
  CHECK(max_abs_diff(worked::peaked().coefficients(),
                     diagonal_state({0.99, 0.01}).coefficients()) <= 1e-15);
}

TEST_CASE("zero coefficient sum takes the Schmidt fallback") {
  const double r = 1.0 / std::sqrt(2.0);
  const BipartiteState singlet_like(ComplexMatrix{{0.0, r}, {-r, 0.0}});
  const auto verdict = factor_test(singlet_like);
  CHECK(verdict.path == FactorPath::schmidt_fallback);
  CHECK_FALSE(verdict.factorized);

  // Product state whose coefficients also sum to zero.
  const auto product = tensor_state(StateVector::normalized({1.0, -1.0}),
                                    StateVector::normalized({1.0, 2.0i}));
  const auto pv = factor_test(product);
  CHECK(pv.path == FactorPath::schmidt_fallback);
  CHECK(pv.factorized);
  REQUIRE(pv.local_left.has_value());
  CHECK(max_abs_diff(tensor_state(*pv.local_left, *pv.local_right).coefficients(),
                     product.coefficients()) <= 1e-10);
}

TEST_CASE("Schmidt decomposition reconstructs and is orthonormal") {
  RandomStates rng(201);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = rng.uniform(1, 6);
    const std::size_t n = rng.uniform(1, 6);
    const auto gamma = rng.bipartite(m, n);
    const auto s = schmidt_decompose(gamma);
    CHECK(s.index() <= std::min(m, n));
    CHECK(max_abs_diff(s.reconstruct(), gamma.coefficients()) <= 1e-10);
    double total = 0.0;
    for (double l : s.distribution()) total += l;
    CHECK(close(total, 1.0, 1e-12));
    CHECK(std::is_sorted(s.coefficients.rbegin(), s.coefficients.rend()));
    for (std::size_t a = 0; a < s.index(); ++a) {
      for (std::size_t b = 0; b < s.index(); ++b) {
        const double want = a == b ? 1.0 : 0.0;
        CHECK(close(inner(s.left_states[a].amplitudes(), s.left_states[b].amplitudes()),
                    want, 1e-10));
        CHECK(close(inner(s.right_states[a].amplitudes(), s.right_states[b].amplitudes()),
                    want, 1e-10));
      }
    }
  }
}

TEST_CASE("Schmidt and trace routes agree on random states") {
  RandomStates rng(202);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gamma = rng.bipartite(rng.uniform(1, 8), rng.uniform(1, 8));
    const double es = entanglement_number_schmidt(gamma).entanglement_number;
    const double et = entanglement_number_trace(gamma).entanglement_number;
    const double eo = std::sqrt(minor_oracle(gamma.coefficients()));
    worst = std::max({worst, std::abs(es - et), std::abs(es - eo)});
    CHECK(close(trace_abs_fourth(gamma.coefficients()),
                trace_oracle(gamma.coefficients()), 1e-12));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("random product states have zero entanglement") {
  RandomStates rng(203);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gamma = rng.product(rng.uniform(1, 8), rng.uniform(1, 8));
    const auto report = entanglement_number_schmidt(gamma);
    CHECK(report.entanglement_number <= 1e-9);
    CHECK(report.schmidt_index == 1);
    const auto verdict = factor_test(gamma);
    CHECK(verdict.factorized);
    REQUIRE(verdict.local_left.has_value());
    CHECK(max_abs_diff(tensor_state(*verdict.local_left, *verdict.local_right).coefficients(),
                       gamma.coefficients()) <= 1e-10);
  }
}

TEST_CASE("factor criterion agrees with the Schmidt index") {
  RandomStates rng(204);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = rng.uniform(1, 6);
    const std::size_t n = rng.uniform(1, 6);
    const auto gamma = trial % 2 == 0 ? rng.product(m, n) : rng.bipartite(m, n);
    const bool factorized = factor_test(gamma).factorized;
    CHECK(factorized == (schmidt_decompose(gamma).index() == 1));
  }
}

TEST_CASE("entanglement bound holds and is saturated only by uniform spectra") {
  CHECK_THROWS_AS(max_entanglement_bound(0), InvalidArgument);
  CHECK(max_entanglement_bound(1) == 0.0);
  CHECK(close(max_entanglement_bound(4), std::sqrt(3.0 / 4.0), 1e-15));
  RandomStates rng(205);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gamma = rng.bipartite(rng.uniform(1, 8), rng.uniform(1, 8));
    const auto report = entanglement_number_schmidt(gamma);
    REQUIRE(report.upper_bound.has_value());
    CHECK(report.entanglement_number <= *report.upper_bound + 1e-10);
    CHECK(close(*report.upper_bound, max_entanglement_bound(*report.schmidt_index), 0.0));
  }
  for (std::size_t r = 2; r <= 8; ++r) {
    const auto u = rng.unitary(r);
    const auto v = rng.unitary(r);
    ComplexMatrix c(r, r);
    for (std::size_t k = 0; k < r; ++k) c(k, k) = 1.0 / std::sqrt(static_cast<double>(r));
    const auto gamma = apply_local_unitary(BipartiteState(c), u, v);
    CHECK(is_maximally_entangled(gamma));
    CHECK(close(entanglement_number_schmidt(gamma).entanglement_number,
                max_entanglement_bound(r), 1e-10));
  }
}

TEST_CASE("entanglement is invariant under local unitaries") {
  RandomStates rng(206);
  for (int s = 0; s < 20; ++s) {
    const std::size_t m = rng.uniform(2, 6);
    const std::size_t n = rng.uniform(2, 6);
    const auto gamma = rng.bipartite(m, n);
    const double e = entanglement_number_schmidt(gamma).entanglement_number;
    for (int k = 0; k < 20; ++k) {
      const auto moved = apply_local_unitary(gamma, rng.unitary(m), rng.unitary(n));
      CHECK(close(entanglement_number_schmidt(moved).entanglement_number, e, 1e-9));
    }
  }
}

TEST_CASE("swapping the subsystems preserves entanglement") {
  RandomStates rng(207);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gamma = rng.bipartite(rng.uniform(1, 6), rng.uniform(1, 6));
    const BipartiteState swapped(transpose(gamma.coefficients()));
    CHECK(close(entanglement_number_schmidt(gamma).entanglement_number,
                entanglement_number_schmidt(swapped).entanglement_number, 1e-10));
    CHECK(schmidt_decompose(gamma).index() == schmidt_decompose(swapped).index());
  }
}

TEST_CASE("equivalent forms of the entanglement number agree") {
  RandomStates rng(208);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gamma = rng.bipartite(rng.uniform(1, 6), rng.uniform(1, 6));
    const auto report = entanglement_number_schmidt(gamma);
    REQUIRE(report.form_discrepancy.has_value());
    CHECK(*report.form_discrepancy <= 1e-10);
  }
}

TEST_CASE("trace route leaves Schmidt-only fields empty") {
  const auto report = entanglement_number_trace(worked::symmetric_2x2());
  CHECK(report.method == EntanglementMethod::trace);
  CHECK_FALSE(report.schmidt_index.has_value());
  CHECK(report.distribution.empty());
  CHECK_FALSE(report.factorized);
}

TEST_CASE("rank tolerance controls the Schmidt index") {
  const auto gamma = diagonal_state({1.0 - 1e-24, 1e-24});
  CHECK(schmidt_decompose(gamma).index() == 1);
  Tolerances loose;
  loose.rank = 1e-16;
  CHECK(schmidt_decompose(gamma, loose).index() == 2);
}
