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

#include <optional>

#include "wcep/linalg.hpp"
#include "wcep/verify.hpp"
#include "wcep/weight.hpp"

namespace wcep {

/// A^+. Exact: X = Q^*(QQ^*)^{-1}(P^*P)^{-1}P^* from A = PQ; float: truncated SVD.
template <Scalar T>
Matrix<T> moore_penrose(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * A^D = A^l (A^{2l+1})^+ A^l with l = ind(A). On the exact backend the result
 * is cross-checked against drazin_cline() and a mismatch throws
 * InvariantViolation.
 */
template <Scalar T>
Matrix<T> drazin(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// Cline's recursion: A = B1 C1, C_i B_i = B_{i+1} C_{i+1} until C_k B_k is
/// nonsingular (or vanishes); then A^D = B1..Bk (C_k B_k)^{-(k+1)} C_k..C1.
template <Scalar T>
Matrix<T> drazin_cline(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/// A^# when ind(A) <= 1, nullopt otherwise.
template <Scalar T>
std::optional<Matrix<T>> group_inverse(const Matrix<T>& a, const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * A {1,3^E} inverse: solves Z (A^*EA) = A and returns Y = Z^*E, so that
 * AYA = A and (EAY)^* = EAY. nullopt when the system is inconsistent, i.e.
 * A{1,3^E} is empty (possible for indefinite E).
 */
template <Scalar T>
std::optional<Matrix<T>> one_three_E(const Matrix<T>& a, const Weight<T>& e,
                                     const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * A {1,4^F} inverse: solves (A F^{-1} A^*) X = A and returns Y = F^{-1} X^*.
 * The candidate is certified (AYA = A, (FYA)^* = FYA) before it is returned;
 * a failure there throws InvariantViolation.
 */
template <Scalar T>
std::optional<Matrix<T>> one_four_F(const Matrix<T>& a, const Weight<T>& f,
                                    const Tolerance& tol = Tolerance::for_backend<T>());

enum class WeightedMpRoute {
  automatic,          // Cholesky on float with positive definite weights, systems otherwise
  existence_systems,  // A F^{-1}A^*EA Y = A = Z A F^{-1}A^*EA
  cholesky,           // float only, both weights positive definite
};

/**
 * A^+_{E,F}: the unique X with AXA = A, XAX = X, (EAX)^* = EAX,
 * (FXA)^* = FXA, or nullopt when it does not exist. E is rows x rows and F is
 * cols x cols; A may be rectangular.
 *
 * The systems route returns F^{-1}(EAY)^* A F^{-1}(EZA)^*. The Cholesky route
 * (E = R^*R, F = S^*S) returns S^{-1}(R A S^{-1})^+ R.
 */
template <Scalar T>
std::optional<Matrix<T>> weighted_mp(const Matrix<T>& a, const Weight<T>& e, const Weight<T>& f,
                                     const Tolerance& tol = Tolerance::for_backend<T>(),
                                     WeightedMpRoute route = WeightedMpRoute::automatic);

}  // namespace wcep
