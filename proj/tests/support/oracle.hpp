/*
 * Copyright 2026 The wcep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Reference computations for tests. Deliberately naive loops over entries so
// that they share no code path with the library's elimination or solvers.

#include <optional>
#include <utility>

#include "wcep/matrix.hpp"

namespace wcep::testing {

inline ExactMatrix naive_mul(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      GaussianRational s;
      for (std::size_t t = 0; t < a.cols(); ++t) s = s + a(i, t) * b(t, j);
      c(i, j) = s;
    }
  }
  return c;
}

inline ExactMatrix naive_adjoint(const ExactMatrix& a) {
  ExactMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j).conj();
  }
  return c;
}

inline ExactMatrix naive_power(const ExactMatrix& a, std::size_t p) {
  ExactMatrix r = ExactMatrix::identity(a.rows());
  for (std::size_t i = 0; i < p; ++i) r = naive_mul(r, a);
  return r;
}

/// Gauss-Jordan on [A | I] with first-nonzero pivoting; nullopt if singular.
inline std::optional<ExactMatrix> naive_inverse(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  ExactMatrix m = a;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(p, j), m(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const GaussianRational d = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) / d;
      inv(c, j) = inv(c, j) / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Row echelon elimination counting pivots.
inline std::size_t naive_rank(ExactMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const GaussianRational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline ExactMatrix columns(const ExactMatrix& a, std::size_t first, std::size_t count) {
  ExactMatrix c(a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < count; ++j) c(i, j) = a(i, first + j);
  }
  return c;
}

inline ExactMatrix rows_of(const ExactMatrix& a, std::size_t first, std::size_t count) {
  ExactMatrix c(count, a.cols());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(first + i, j);
  }
  return c;
}

/// Hermitian H is positive definite iff elimination without pivoting meets only positive real pivots.
inline bool naive_positive_definite(ExactMatrix h) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const GaussianRational p = h(k, k);
    if (!p.is_real() || sgn(p.real()) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const GaussianRational f = h(i, k) / p;
      for (std::size_t j = k; j < n; ++j) h(i, j) -= f * h(k, j);
    }
  }
  return true;
}

}  // namespace wcep::testing
