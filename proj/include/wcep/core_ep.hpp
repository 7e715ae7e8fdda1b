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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wcep/classical.hpp"
#include "wcep/verify.hpp"
#include "wcep/weight.hpp"

namespace wcep {

/**
 * How the E-weighted core-EP inverse X (resp. the F-weighted dual) is built,
 * with k = ind(A) and m >= k:
 *
 *   thm_onethree_power   X = A^D A^m Y,            Y in A^m{1,3^E}
 *   cor_weighted_mp      X = A^D A^m (A^m)^+_{E,I}
 *   prop_mp_of_power     X = A^m (A^{m+1})^+_{E,I}  (E positive definite)
 *   factor_sufficient    X = A^D A^{2m} W^* E,      A^m = W((A^m)^*)^2 E A^m
 *
 * Duals: Y A^m A^D, (A^m)^+_{I,F} A^m A^D, (A^{m+1})^+_{I,F} A^m and
 * F^{-1} W^* A^{2m} A^D with A^m = A^m F^{-1}((A^m)^*)^2 W.
 */
enum class ConstructionPath { thm_onethree_power, cor_weighted_mp, prop_mp_of_power, factor_sufficient };

std::string_view to_string(ConstructionPath path);

struct CoreEpOptions {
  std::optional<std::size_t> power;  // m; defaults to k = ind(A)
  ConstructionPath path = ConstructionPath::thm_onethree_power;
};

/**
 * A^{core-EP,E}: the unique X with XA^{k+1} = A^k, AX^2 = X, (EAX)^* = EAX.
 * Returns nullopt when A^m{1,3^E} is empty (or, on the weighted-MP paths,
 * when the weighted MP inverse used does not exist). Every returned value
 * carries a passing certificate; a failing one throws InvariantViolation.
 * Throws PreconditionError for m < k or prop_mp_of_power with indefinite E.
 */
template <Scalar T>
std::optional<InverseResult<T>> core_ep(const Matrix<T>& a, const Weight<T>& e,
                                        const Tolerance& tol = Tolerance::for_backend<T>(), CoreEpOptions opts = {});

/// A^{F,core-EP}: the unique X with A^{k+1}X = A^k, X^2A = X, (FXA)^* = FXA.
template <Scalar T>
std::optional<InverseResult<T>> dual_core_ep(const Matrix<T>& a, const Weight<T>& f,
                                             const Tolerance& tol = Tolerance::for_backend<T>(),
                                             CoreEpOptions opts = {});

/// A^{core,E} = A^# A Y, Y in A{1,3^E}; nullopt if ind(A) > 1 or A{1,3^E} is empty.
template <Scalar T>
std::optional<Matrix<T>> weighted_core(const Matrix<T>& a, const Weight<T>& e,
                                       const Tolerance& tol = Tolerance::for_backend<T>());

/// A^{F,core} = Y A A^#, Y in A{1,4^F}; nullopt if ind(A) > 1 or A{1,4^F} is empty.
template <Scalar T>
std::optional<Matrix<T>> weighted_dual_core(const Matrix<T>& a, const Weight<T>& f,
                                            const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * A^D A^m (A^m)^+_{E,I}; when E is positive definite it is also compared with
 * A^m (A^{m+1})^+_{E,I}. Both must match core_ep(), otherwise
 * InvariantViolation.
 */
template <Scalar T>
std::optional<Matrix<T>> core_ep_via_weighted_mp(const Matrix<T>& a, const Weight<T>& e,
                                                 const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * A^D A^{2k} W^* E for a witness W of A^k = W((A^k)^*)^2 E A^k. Throws
 * PreconditionError when W is not a witness.
 */
template <Scalar T>
Matrix<T> core_ep_from_factorization(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& witness,
                                     const Tolerance& tol = Tolerance::for_backend<T>());

/// Dual: F^{-1} W^* A^{2k} A^D for a witness of A^k = A^k F^{-1}((A^k)^*)^2 W.
template <Scalar T>
Matrix<T> dual_core_ep_from_factorization(const Matrix<T>& a, const Weight<T>& f, const Matrix<T>& witness,
                                          const Tolerance& tol = Tolerance::for_backend<T>());

/// A^D recovered as X^{m+1} A^m from X = A^{core-EP,E}. Throws PreconditionError for m < ind(A).
template <Scalar T>
Matrix<T> drazin_from_core_ep(const Matrix<T>& a, const Matrix<T>& x, std::size_t m,
                              const Tolerance& tol = Tolerance::for_backend<T>());

/// Dual recovery A^D = A^m X^{m+1} from X = A^{F,core-EP}.
template <Scalar T>
Matrix<T> drazin_from_dual_core_ep(const Matrix<T>& a, const Matrix<T>& x, std::size_t m,
                                   const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * (A^l)^{core-EP,E} for l >= 1. Also checks that it equals
 * (A^{core-EP,E})^l and that A^{l-1} times it gives back A^{core-EP,E}.
 */
template <Scalar T>
std::optional<Matrix<T>> core_ep_power(const Matrix<T>& a, const Weight<T>& e, std::size_t l,
                                       const Tolerance& tol = Tolerance::for_backend<T>());

/// (A^l)^{F,core-EP} = (A^{F,core-EP})^l, with A^{F,core-EP} = (A^l)^{F,core-EP} A^{l-1}.
template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_power(const Matrix<T>& a, const Weight<T>& f, std::size_t l,
                                            const Tolerance& tol = Tolerance::for_backend<T>());

/// (A^{core-EP,E})^{core-EP,E} = A^2 A^{core-EP,E}, checked against the direct computation.
template <Scalar T>
std::optional<Matrix<T>> core_ep_of_core_ep(const Matrix<T>& a, const Weight<T>& e,
                                            const Tolerance& tol = Tolerance::for_backend<T>());

/// (A^{F,core-EP})^{F,core-EP} = A^{F,core-EP} A^2, checked against the direct computation.
template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_of_dual_core_ep(const Matrix<T>& a, const Weight<T>& f,
                                                      const Tolerance& tol = Tolerance::for_backend<T>());

struct NoExist {};

struct HypothesisFailed {
  std::vector<std::string> failed;  // e.g. "AB = O"
};

/// (A + B)^inv = A^inv + B^inv and (A - B)^inv = A^inv - B^inv.
template <Scalar T>
struct AdditiveLaw {
  Matrix<T> sum;
  Matrix<T> difference;
};

template <Scalar T>
using AdditiveOutcome = std::variant<AdditiveLaw<T>, HypothesisFailed, NoExist>;

/**
 * Under A^*EB = O and AB = O = BA: returns the sum and difference of the
 * E-weighted core-EP inverses of A and B, after checking them against
 * core_ep(A + B) and core_ep(A - B). HypothesisFailed lists every failing
 * hypothesis; NoExist when A or B has no E-weighted core-EP inverse.
 */
template <Scalar T>
AdditiveOutcome<T> additive_core_ep(const Matrix<T>& a, const Matrix<T>& b, const Weight<T>& e,
                                    const Tolerance& tol = Tolerance::for_backend<T>());

/// Dual, under A F^{-1} B^* = O and AB = O = BA.
template <Scalar T>
AdditiveOutcome<T> additive_dual_core_ep(const Matrix<T>& a, const Matrix<T>& b, const Weight<T>& f,
                                         const Tolerance& tol = Tolerance::for_backend<T>());

/// (A +- B)^D = A^D +- B^D under AB = O = BA.
template <Scalar T>
AdditiveOutcome<T> additive_drazin(const Matrix<T>& a, const Matrix<T>& b,
                                   const Tolerance& tol = Tolerance::for_backend<T>());

}  // namespace wcep
