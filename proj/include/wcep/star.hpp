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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wcep/core_ep.hpp"

namespace wcep {

enum class StarSide { star_core_ep, dual_core_ep_star };

/// Residual of each equation of the system uniquely solved by the star matrix.
struct StarSystemReport {
  std::map<std::string, double> residuals;  // keyed by the equation text
  bool unique_solution = false;             // every residual within tolerance
  StarSide side = StarSide::star_core_ep;
};

template <Scalar T>
struct ProjectorReport {
  Matrix<T> projector;
  double idempotency_residual = 0.0;
  bool idempotent = false;
  bool range_target_met = false;
  bool nullspace_target_met = false;

  bool passed() const { return idempotent && range_target_met && nullspace_target_met; }
};

/// A^*A A^{core-EP,E}; nullopt when the E-weighted core-EP inverse does not exist.
template <Scalar T>
std::optional<Matrix<T>> star_core_ep(const Matrix<T>& a, const Weight<T>& e,
                                      const Tolerance& tol = Tolerance::for_backend<T>());

/// A^{F,core-EP} A A^*; nullopt when the F-weighted dual core-EP inverse does not exist.
template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_star(const Matrix<T>& a, const Weight<T>& f,
                                           const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * X(A^+)^*X = X, XA^k = A^*A^k, (A^+)^*X = A A^{core-EP,E}. A^+ is always the
 * unweighted Moore-Penrose inverse. The third residual is +inf when the
 * core-EP inverse does not exist.
 */
template <Scalar T>
StarSystemReport verify_star_system(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& x,
                                    const Tolerance& tol = Tolerance::for_backend<T>());

/// Y(A^+)^*Y = Y, A^kY = A^kA^*, Y(A^+)^* = A^{F,core-EP} A.
template <Scalar T>
StarSystemReport verify_dual_star_system(const Matrix<T>& a, const Weight<T>& f, const Matrix<T>& y,
                                         const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * Ten independent characterizations of X = A^{*,core-EP,E}, in order (i)..(x).
 * Probe 0 compares X with star_core_ep directly; every other probe uses only
 * its own equations. nullopt when the core-EP inverse does not exist.
 */
template <Scalar T>
std::optional<std::array<bool, 10>> star_equivalences(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& x,
                                                      const Tolerance& tol = Tolerance::for_backend<T>());

template <Scalar T>
std::optional<std::array<bool, 10>> dual_star_equivalences(const Matrix<T>& a, const Weight<T>& f,
                                                           const Matrix<T>& y,
                                                           const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * With X = A^{*,core-EP,E} and C = A^{core-EP,E}:
 *   first:  (A^+)^*X onto R(A^k) along N(C)
 *   second: X(A^+)^* onto R(A^*A^k) along N(C(A^+)^*)
 */
template <Scalar T>
std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> star_projectors(
    const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol = Tolerance::for_backend<T>());

/**
 * With Y = A^{F,core-EP,*} and D = A^{F,core-EP}:
 *   first:  Y(A^+)^* onto R(D) along N(A^k)
 *   second: (A^+)^*Y onto R((A^+)^*D) along N(A^kA^*)
 */
template <Scalar T>
std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> dual_star_projectors(
    const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol = Tolerance::for_backend<T>());

/// X is the outer inverse of (A^+)^* with range R(A^*A^k) and null space N(A^{core-EP,E}).
template <Scalar T>
std::optional<bool> outer_inverse_identity(const Matrix<T>& a, const Weight<T>& e,
                                           const Tolerance& tol = Tolerance::for_backend<T>());

/// Y is the outer inverse of (A^+)^* with range R(A^{F,core-EP}) and null space N(A^kA^*).
template <Scalar T>
std::optional<bool> dual_outer_inverse_identity(const Matrix<T>& a, const Weight<T>& f,
                                                const Tolerance& tol = Tolerance::for_backend<T>());

}  // namespace wcep
