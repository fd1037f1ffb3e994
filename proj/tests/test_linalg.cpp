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
#include <chrono>

#include "spooky/errors.hpp"
#include "spooky/linalg.hpp"
#include "spooky/random_states.hpp"
#include "test_support.hpp"

using namespace spooky;
using namespace std::complex_literals;
using spooky::testing::close;

namespace {

void check_svd_invariants(const ComplexMatrix& c, const SVDResult& r) {
  const double scale = std::max(1.0, frobenius_norm(c));
  CHECK(frobenius_norm(subtract(r.reconstruct(), c)) <= 1e-10 * scale);
  CHECK(is_unitary(r.left_vectors, 1e-10));
  CHECK(is_unitary(r.right_vectors, 1e-10));
  CHECK(r.singular_values.size() == std::min(c.rows(), c.cols()));
  CHECK(std::is_sorted(r.singular_values.rbegin(), r.singular_values.rend()));
  for (double s : r.singular_values) CHECK(s >= 0.0);
}

}  // namespace

TEST_CASE("hermitian_eigen on a diagonal matrix") {
  const ComplexMatrix h{{1.0, 0.0}, {0.0, 3.0}};
  const auto e = hermitian_eigen(h);
  CHECK(e.eigenvalues == std::vector<double>{3.0, 1.0});
  CHECK(std::abs(e.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen on (1/6)[[5, 2], [2, 1]]") {
  const ComplexMatrix h{{5.0 / 6, 2.0 / 6}, {2.0 / 6, 1.0 / 6}};
  const auto e = hermitian_eigen(h);
  // Roots of x^2 - x + 1/36 by the quadratic formula.
  const double root = std::sqrt(1.0 - 4.0 / 36.0);
  CHECK(close(e.eigenvalues[0], (1.0 + root) / 2.0, 1e-14));
  CHECK(close(e.eigenvalues[1], (1.0 - root) / 2.0, 1e-14));
}

TEST_CASE("hermitian_eigen eigenpairs on random Hermitian matrices") {
  RandomStates rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = rng.uniform(1, 12);
    const auto g = rng.gaussian_matrix(n, n);
    const auto h = scale(add(g, adjoint(g)), 0.5);
    const auto e = hermitian_eigen(h);

    double sum = 0.0;
    for (double l : e.eigenvalues) sum += l;
    CHECK(close(sum, trace(h).real(), 1e-10));
    CHECK(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
    CHECK(is_unitary(e.eigenvectors, 1e-10));
    for (std::size_t k = 0; k < n; ++k) {
      const auto v = e.eigenvectors.column_vector(k);
      const auto hv = matvec(h, v);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(close(hv[i], e.eigenvalues[k] * v[i], 1e-9));
      }
    }
  }
}

TEST_CASE("hermitian_eigen keeps degenerate eigenvalues in diagonal order") {
  const auto e = hermitian_eigen(ComplexMatrix::identity(3));
  CHECK(e.eigenvalues == std::vector<double>{1.0, 1.0, 1.0});
  CHECK(e.eigenvectors == ComplexMatrix::identity(3));
  CHECK(e.sweeps == 0);
}

TEST_CASE("hermitian_eigen rejects bad input") {
  CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix(2, 3)), NotHermitian);
  const ComplexMatrix skew{{1.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eigen(skew), NotHermitian);
  const ComplexMatrix complex_diag{{1.0i, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eigen(complex_diag), NotHermitian);
}

TEST_CASE("eigenvalues of C^*C are never below -1e-12") {
  RandomStates rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = rng.uniform(1, 8);
    const auto n = rng.uniform(1, 8);
    auto c = rng.gaussian_matrix(m, n);
    if (trial % 2 == 0) {
      // rank-deficient: zero eigenvalues exercise the clamp.
      c = matmul(rng.gaussian_matrix(m, 1), rng.gaussian_matrix(1, n));
    }
    const auto e = hermitian_eigen(matmul(adjoint(c), c));
    for (double l : e.eigenvalues) CHECK(l >= -kEigenClampTolerance);
  }
}

TEST_CASE("svd of a diagonal with known values") {
  const ComplexMatrix c{{std::sqrt(0.99), 0.0}, {0.0, std::sqrt(0.01)}};
  const auto r = svd(c);
  CHECK(close(r.singular_values[0], std::sqrt(0.99), 1e-15));
  CHECK(close(r.singular_values[1], std::sqrt(0.01), 1e-15));
  check_svd_invariants(c, r);
}

TEST_CASE("svd of the 2x2 entangled example") {
  const double s = 1.0 / std::sqrt(10.0);
  const ComplexMatrix c{{s, -2.0i * s}, {s, 2.0i * s}};
  const auto r = svd(c);
  double squares = 0.0;
  double fourths = 0.0;
  for (double x : r.singular_values) {
    squares += x * x;
    fourths += x * x * x * x;
  }
  CHECK(close(squares, 1.0, 1e-14));
  CHECK(close(fourths, 17.0 / 25.0, 1e-14));
  check_svd_invariants(c, r);
}

TEST_CASE("svd of a rank-one outer product") {
  RandomStates rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = rng.state(rng.uniform(1, 8));
    const auto b = rng.state(rng.uniform(1, 8));
    ComplexMatrix c(a.dim(), b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) c(i, j) = a[i] * b[j];
    }
    const auto r = svd(c);
    CHECK(close(r.singular_values[0], 1.0, 1e-10));
    for (std::size_t k = 1; k < r.singular_values.size(); ++k) {
      CHECK(r.singular_values[k] <= 1e-14);
    }
    check_svd_invariants(c, r);
  }
}

TEST_CASE("svd of the zero matrix") {
  const ComplexMatrix z(3, 2);
  const auto r = svd(z);
  CHECK(r.singular_values == std::vector<double>{0.0, 0.0});
  check_svd_invariants(z, r);
}

TEST_CASE("svd invariants on 1000 random matrices up to 16x16") {
  RandomStates rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = rng.uniform(1, 16);
    const auto n = rng.uniform(1, 16);
    auto c = rng.gaussian_matrix(m, n);
    if (trial % 5 == 0 && m > 1 && n > 1) {
      const auto k = rng.uniform(1, std::min(m, n) - 1);
      c = matmul(rng.gaussian_matrix(m, k), rng.gaussian_matrix(k, n));
    }
    const auto r = svd(c);
    check_svd_invariants(c, r);

    double squares = 0.0;
    for (double s : r.singular_values) squares += s * s;
    CHECK(close(squares, testing::squared_frobenius(c),
                1e-10 * std::max(1.0, testing::squared_frobenius(c))));

    const auto rt = svd(transpose(c));
    for (std::size_t k = 0; k < r.singular_values.size(); ++k) {
      CHECK(close(r.singular_values[k], rt.singular_values[k],
                  1e-10 * std::max(1.0, r.singular_values[0])));
    }
  }
}

TEST_CASE("one-sided and Gram routes give the same squared singular values") {
  RandomStates rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = rng.gaussian_matrix(rng.uniform(1, 10), rng.uniform(1, 10));
    const auto direct = svd(c).singular_values;
    const auto gram = gram_singular_values(c);
    const double top = direct.empty() ? 1.0 : std::max(1.0, direct[0] * direct[0]);
    REQUIRE(direct.size() == gram.size());
    for (std::size_t k = 0; k < direct.size(); ++k) {
      CHECK(close(direct[k] * direct[k], gram[k] * gram[k], 1e-12 * top));
    }
  }
}

TEST_CASE("svd at the largest supported size") {
  RandomStates rng(41);
  const auto c = rng.gaussian_matrix(256, 256);
  const auto start = std::chrono::steady_clock::now();
  const auto r = svd(c);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("256x256 svd took " << seconds << " s");
  check_svd_invariants(c, r);
}
