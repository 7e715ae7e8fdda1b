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

#include <cstddef>
#include <optional>
#include <vector>

#include "wcep/matrix.hpp"
#include "wcep/tolerance.hpp"

namespace wcep {

/// Reduced row echelon form with the pivot columns. Exact backend only.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(const ExactMatrix& a);

/// Numerical rank (float) or exact rank (elimination pivots).
template <Scalar T>
std::size_t rank(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// Smallest k >= 0 with rank(A^k) == rank(A^{k+1}); never exceeds n.
template <Scalar T>
std::size_t index(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// A^p by binary exponentiation; A^0 is the identity.
template <Scalar T>
Matrix<T> matrix_power(const Matrix<T>& a, std::size_t p);

/**
 * A = left * right with left rows x r (full column rank), right r x cols (full
 * row rank), r = rank(A). For r = 0 both factors have an empty inner
 * dimension and their product is the zero matrix of A's shape.
 *
 * Exact: left = pivot columns of A, right = nonzero rows of rref(A).
 * Float: left = U_r * Sigma_r, right = V_r^*.
 */
template <Scalar T>
struct FullRankFactors {
  Matrix<T> left;
  Matrix<T> right;
  std::size_t rank = 0;
};

template <Scalar T>
FullRankFactors<T> full_rank_factorization(const Matrix<T>& a,
                                           const Tolerance& tol = Tolerance::for_backend<T>());

/// Some G with A G A = A. Exact: elimination-canonical; float: the pseudoinverse.
template <Scalar T>
Matrix<T> inner_inverse(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// A^{-1}, or nullopt when A is singular. Throws DimensionError if A is not square.
template <Scalar T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// Z with Z B = A, or nullopt when the system is inconsistent.
template <Scalar T>
std::optional<Matrix<T>> solve_right(const Matrix<T>& b, const Matrix<T>& a,
                                     const Tolerance& tol = Tolerance::for_backend<T>());

/// X with B X = A, or nullopt when the system is inconsistent.
template <Scalar T>
std::optional<Matrix<T>> solve_left(const Matrix<T>& b, const Matrix<T>& a,
                                    const Tolerance& tol = Tolerance::for_backend<T>());

/// ||L - R||_F / (1 + ||L||_F + ||R||_F).
template <Scalar T>
double relative_residual(const Matrix<T>& lhs, const Matrix<T>& rhs);

/// L == R exactly, or within tol.residual_rel on the float backend.
template <Scalar T>
bool equal_within(const Matrix<T>& lhs, const Matrix<T>& rhs, const Tolerance& tol = Tolerance::for_backend<T>());

/// M == 0 exactly, or ||M||_F <= residual_rel * scale on the float backend.
template <Scalar T>
bool negligible(const Matrix<T>& m, double scale, const Tolerance& tol = Tolerance::for_backend<T>());

// Float-only building blocks (backed by Eigen).
std::vector<double> singular_values(const FloatMatrix& a);
FloatMatrix svd_pseudoinverse(const FloatMatrix& a, const Tolerance& tol);
/// Upper-triangular R with E = R^* R; nullopt when E is not positive definite.
std::optional<FloatMatrix> cholesky_upper(const FloatMatrix& e);

}  // namespace wcep
