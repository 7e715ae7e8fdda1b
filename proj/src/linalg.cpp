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

#include "wcep/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "float_backend.hpp"

namespace wcep {

RowEchelon row_reduce(const ExactMatrix& a) {
  RowEchelon out{a, {}};
  ExactMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const GaussianRational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if constexpr (is_exact_v<T>) {
    return row_reduce(a).pivot_cols.size();
  } else {
    return detail::float_rank(a, tol);
  }
}

template <Scalar T>
std::size_t index(const Matrix<T>& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("index: matrix must be square, got " + a.shape());
  const std::size_t n = a.rows();
  std::size_t prev_rank = n;  // rank(A^0) = rank(I)
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    power = power * a;
    const std::size_t r = rank(power, tol);
    if (r == prev_rank) return k;
    prev_rank = r;
  }
  return n;
}

template <Scalar T>
Matrix<T> matrix_power(const Matrix<T>& a, std::size_t p) {
  if (!a.is_square()) throw DimensionError("matrix_power: matrix must be square, got " + a.shape());
  Matrix<T> result = Matrix<T>::identity(a.rows());
  Matrix<T> base = a;
  while (p > 0) {
    if (p & 1U) result = result * base;
    p >>= 1U;
    if (p > 0) base = base * base;
  }
  return result;
}

namespace {

ExactMatrix exact_inverse_or_throw(const ExactMatrix& a) {
  auto inv = inverse(a, Tolerance::exact());
  if (!inv) throw InvariantViolation("expected a nonsingular Gram matrix");
  return *std::move(inv);
}

}  // namespace

template <Scalar T>
FullRankFactors<T> full_rank_factorization(const Matrix<T>& a, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if constexpr (is_exact_v<T>) {
    const RowEchelon re = row_reduce(a);
    const std::size_t r = re.pivot_cols.size();
    FullRankFactors<T> f;
    f.rank = r;
    f.left = ExactMatrix(a.rows(), r);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < r; ++j) f.left(i, j) = a(i, re.pivot_cols[j]);
    f.right = re.reduced.block(0, 0, r, a.cols());
    return f;
  } else {
    return detail::float_full_rank(a, tol);
  }
}

template <Scalar T>
Matrix<T> inner_inverse(const Matrix<T>& a, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if constexpr (is_exact_v<T>) {
    const RowEchelon re = row_reduce(a);
    const std::size_t r = re.pivot_cols.size();
    if (r == 0) return ExactMatrix(a.cols(), a.rows());
    ExactMatrix left(a.rows(), r);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < r; ++j) left(i, j) = a(i, re.pivot_cols[j]);
    // left^+ = (left^* left)^{-1} left^*; the rref rows have an identity at the
    // pivot columns, so embedding I_r there gives a right inverse.
    const ExactMatrix left_star = left.conj_transpose();
    const ExactMatrix left_inv = exact_inverse_or_throw(left_star * left) * left_star;
    ExactMatrix g(a.cols(), a.rows());
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) g(re.pivot_cols[j], i) = left_inv(j, i);
    return g;
  } else {
    return detail::float_pseudoinverse(a, tol);
  }
}

template <Scalar T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("inverse: matrix must be square, got " + a.shape());
  check_tolerance<T>(tol);
  if constexpr (is_exact_v<T>) {
    const std::size_t n = a.rows();
    const RowEchelon re = row_reduce(hstack(a, ExactMatrix::identity(n)));
    if (re.pivot_cols.size() < n || (n > 0 && re.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    return re.reduced.block(0, n, n, n);
  } else {
    return detail::float_inverse(a, tol);
  }
}

template <Scalar T>
std::optional<Matrix<T>> solve_right(const Matrix<T>& b, const Matrix<T>& a, const Tolerance& tol) {
  if (b.cols() != a.cols()) {
    throw DimensionError("solve_right: Z B = A needs B.cols == A.cols, got " + b.shape() + " and " + a.shape());
  }
  Matrix<T> z = a * inner_inverse(b, tol);
  const Matrix<T> defect = z * b - a;
  if constexpr (is_exact_v<T>) {
    if (!defect.is_zero()) return std::nullopt;
  } else {
    if (defect.frobenius_norm() > tol.residual_rel * a.frobenius_norm()) return std::nullopt;
  }
  return z;
}

template <Scalar T>
std::optional<Matrix<T>> solve_left(const Matrix<T>& b, const Matrix<T>& a, const Tolerance& tol) {
  if (b.rows() != a.rows()) {
    throw DimensionError("solve_left: B X = A needs B.rows == A.rows, got " + b.shape() + " and " + a.shape());
  }
  Matrix<T> x = inner_inverse(b, tol) * a;
  const Matrix<T> defect = b * x - a;
  if constexpr (is_exact_v<T>) {
    if (!defect.is_zero()) return std::nullopt;
  } else {
    if (defect.frobenius_norm() > tol.residual_rel * a.frobenius_norm()) return std::nullopt;
  }
  return x;
}

template <Scalar T>
double relative_residual(const Matrix<T>& lhs, const Matrix<T>& rhs) {
  const Matrix<T> d = lhs - rhs;
  if constexpr (is_exact_v<T>) {
    if (d.is_zero()) return 0.0;
  }
  return d.frobenius_norm() / (1.0 + lhs.frobenius_norm() + rhs.frobenius_norm());
}

template <Scalar T>
bool equal_within(const Matrix<T>& lhs, const Matrix<T>& rhs, const Tolerance& tol) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  if constexpr (is_exact_v<T>) {
    return lhs == rhs;
  } else {
    return relative_residual(lhs, rhs) <= tol.residual_rel;
  }
}

template <Scalar T>
bool negligible(const Matrix<T>& m, double scale, const Tolerance& tol) {
  if constexpr (is_exact_v<T>) {
    return m.is_zero();
  } else {
    return m.frobenius_norm() <= tol.residual_rel * std::max(1.0, scale);
  }
}

std::vector<double> singular_values(const FloatMatrix& a) { return detail::float_singular_values(a); }

FloatMatrix svd_pseudoinverse(const FloatMatrix& a, const Tolerance& tol) {
  check_tolerance<Complex>(tol);
  return detail::float_pseudoinverse(a, tol);
}

std::optional<FloatMatrix> cholesky_upper(const FloatMatrix& e) { return detail::float_cholesky_upper(e); }

#define WCEP_INSTANTIATE(T)                                                                          \
  template std::size_t rank(const Matrix<T>&, const Tolerance&);                                   \
  template std::size_t index(const Matrix<T>&, const Tolerance&);                                  \
  template Matrix<T> matrix_power(const Matrix<T>&, std::size_t);                                  \
  template FullRankFactors<T> full_rank_factorization(const Matrix<T>&, const Tolerance&);         \
  template Matrix<T> inner_inverse(const Matrix<T>&, const Tolerance&);                            \
  template std::optional<Matrix<T>> inverse(const Matrix<T>&, const Tolerance&);                   \
  template std::optional<Matrix<T>> solve_right(const Matrix<T>&, const Matrix<T>&, const Tolerance&); \
  template std::optional<Matrix<T>> solve_left(const Matrix<T>&, const Matrix<T>&, const Tolerance&);  \
  template double relative_residual(const Matrix<T>&, const Matrix<T>&);                           \
  template bool equal_within(const Matrix<T>&, const Matrix<T>&, const Tolerance&);                \
  template bool negligible(const Matrix<T>&, double, const Tolerance&);

WCEP_INSTANTIATE(GaussianRational)
WCEP_INSTANTIATE(Complex)

#undef WCEP_INSTANTIATE

}  // namespace wcep
