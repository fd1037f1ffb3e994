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

#include "spooky/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "spooky/errors.hpp"

namespace spooky {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kNegligibleColumn = 1e-30;

/// Unitary plane rotation J = [[c, s*ph], [-s*conj(ph), c]] acting on the
/// (p, q) coordinate plane. Chosen so that J^* [[a, g], [conj(g), d]] J is
/// diagonal.
struct PlaneRotation {
  double c;
  double s;
  ComplexScalar phase;

  static PlaneRotation annihilating(double a, double d, ComplexScalar g) {
    const double mag = std::abs(g);
    const double tau = (d - a) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, g / mag};
  }

  // M <- M J, touching columns p and q only.
  void apply_right(ComplexMatrix& m, std::size_t p, std::size_t q) const {
    const ComplexScalar sp = s * phase;
    const ComplexScalar sq = s * std::conj(phase);
    for (std::size_t k = 0; k < m.rows(); ++k) {
      const ComplexScalar mp = m(k, p);
      const ComplexScalar mq = m(k, q);
      m(k, p) = c * mp - sq * mq;
      m(k, q) = sp * mp + c * mq;
    }
  }

  // M <- J^* M, touching rows p and q only.
  void apply_left_adjoint(ComplexMatrix& m, std::size_t p,
                          std::size_t q) const {
    const ComplexScalar sp = s * phase;
    const ComplexScalar sq = s * std::conj(phase);
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const ComplexScalar mp = m(p, k);
      const ComplexScalar mq = m(q, k);
      m(p, k) = c * mp - sp * mq;
      m(q, k) = sq * mp + c * mq;
    }
  }
};

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return values[x] > values[y];
                   });
  return order;
}

/// Orthogonalizes `v` against `basis` (two passes of modified Gram-Schmidt).
/// Returns the normalized result if enough of `v` survives.
std::optional<std::vector<ComplexScalar>> orthonormalize_against(
    std::vector<ComplexScalar> v,
    const std::vector<std::vector<ComplexScalar>>& basis) {
  const double start = norm(v);
  if (start == 0.0) return std::nullopt;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const ComplexScalar overlap = inner(b, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= overlap * b[k];
    }
  }
  const double left = norm(v);
  if (left <= 0.5 * start) return std::nullopt;
  for (auto& z : v) z /= left;
  return v;
}

/// The standard basis vector with the largest component outside span(basis),
/// orthonormalized against it. Requires basis.size() < dim; some e_i then
/// keeps at least (dim - |basis|) / dim of its squared norm.
std::vector<ComplexScalar> best_completion(
    std::size_t dim, const std::vector<std::vector<ComplexScalar>>& basis) {
  std::size_t best = 0;
  double best_residual = -1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double captured = 0.0;
    for (const auto& b : basis) captured += std::norm(b[i]);
    if (1.0 - captured > best_residual) {
      best_residual = 1.0 - captured;
      best = i;
    }
  }
  std::vector<ComplexScalar> v(dim);
  v[best] = 1.0;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const ComplexScalar overlap = inner(b, v);
      for (std::size_t k = 0; k < dim; ++k) v[k] -= overlap * b[k];
    }
  }
  const double left = norm(v);
  for (auto& z : v) z /= left;
  return v;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  if (!h.is_square()) {
    throw NotHermitian("hermitian_eigen: matrix is " +
                       std::to_string(h.rows()) + "x" +
                       std::to_string(h.cols()));
  }
  if (!is_hermitian(h, kHermitianTolerance * std::max(1.0, max_abs(h)))) {
    throw NotHermitian("hermitian_eigen: matrix differs from its adjoint");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kOffDiagonalTolerance * frobenius_norm(a);

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm(a) > target) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const ComplexScalar g = a(p, q);
        if (g == ComplexScalar{}) continue;
        const auto rot = PlaneRotation::annihilating(a(p, p).real(),
                                                     a(q, q).real(), g);
        rot.apply_right(a, p, q);
        rot.apply_left_adjoint(a, p, q);
        rot.apply_right(v, p, q);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const auto order = descending_order(diag);

  HermitianEigen out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) {
      out.eigenvectors(i, k) = v(i, order[k]);
    }
  }
  return out;
}

ComplexMatrix SVDResult::diagonal() const {
  ComplexMatrix d(left_vectors.rows(), right_vectors.rows());
  for (std::size_t k = 0; k < singular_values.size(); ++k) {
    d(k, k) = singular_values[k];
  }
  return d;
}

ComplexMatrix SVDResult::reconstruct() const {
  return matmul(matmul(left_vectors, diagonal()), right_vectors);
}

SVDResult svd(const ComplexMatrix& c) {
  const std::size_t m = c.rows();
  const std::size_t n = c.cols();
  ComplexMatrix w = c;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double tol = std::numeric_limits<double>::epsilon() *
                     std::max<double>(1.0, static_cast<double>(m));
  // Columns this far below ||C|| are left alone. Without the floor, surplus
  // columns (n > rank) keep shrinking into subnormals where the rotation
  // phase g/|g| loses its unit modulus.
  const double negligible = std::pow(kNegligibleColumn * frobenius_norm(c), 2);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        ComplexScalar g{};
        for (std::size_t k = 0; k < m; ++k) {
          alpha += std::norm(w(k, p));
          beta += std::norm(w(k, q));
          g += std::conj(w(k, p)) * w(k, q);
        }
        const double mag = std::abs(g);
        if (alpha <= negligible || beta <= negligible) continue;
        if (mag == 0.0 || mag <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const auto rot = PlaneRotation::annihilating(alpha, beta, g);
        rot.apply_right(w, p, q);
        rot.apply_right(v, p, q);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> column_norms(n);
  for (std::size_t j = 0; j < n; ++j) column_norms[j] = norm(w.column_vector(j));
  const auto order = descending_order(column_norms);
  const std::size_t k = std::min(m, n);

  SVDResult out;
  out.singular_values.resize(k);
  out.right_vectors = ComplexMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      out.right_vectors(r, j) = std::conj(v(j, order[r]));
    }
  }

  std::vector<std::optional<std::vector<ComplexScalar>>> slots(m);
  std::vector<std::vector<ComplexScalar>> accepted;
  for (std::size_t r = 0; r < k; ++r) {
    const double sigma = column_norms[order[r]];
    out.singular_values[r] = sigma;
    if (sigma == 0.0) continue;
    auto u = w.column_vector(order[r]);
    for (auto& z : u) z /= sigma;
    slots[r] = orthonormalize_against(std::move(u), accepted);
    if (slots[r]) accepted.push_back(*slots[r]);
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (slots[r]) continue;
    slots[r] = best_completion(m, accepted);
    accepted.push_back(*slots[r]);
  }

  out.left_vectors = ComplexMatrix(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) out.left_vectors(i, r) = (*slots[r])[i];
  }
  return out;
}

std::vector<double> gram_singular_values(const ComplexMatrix& c) {
  const auto spectrum = hermitian_eigen(matmul(adjoint(c), c));
  std::vector<double> out(std::min(c.rows(), c.cols()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::sqrt(std::max(0.0, spectrum.eigenvalues[k]));
  }
  return out;
}

}  // namespace spooky
