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
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "wcep/linalg.hpp"
#include "wcep/weight.hpp"

namespace wcep {

/// Optional weight; non-deduced so that nullptr can be passed directly.
template <Scalar T>
using WeightPtr = std::type_identity_t<const Weight<T>*>;

/**
 * Defining equations of the inverse families. The P tags are the Penrose-type
 * equations; S and D tags are the matrix-equation systems uniquely solved by
 * the star weighted core-EP matrix and its dual.
 *
 *   P1  AXA = A            P6   XA^2 = A          S1   X(A^+)^*X = X
 *   P2  XAX = X            P6k  XA^{k+1} = A^k    S2k  XA^k = A^*A^k
 *   P3E (EAX)^* = EAX      P7   AX^2 = X          S3   (A^+)^*X = A A^{core-EP,E}
 *   P4F (FXA)^* = FXA      P8   A^2X = A          D1   X(A^+)^*X = X
 *   P5  AX = XA            P8k  A^{k+1}X = A^k    D2k  A^kX = A^kA^*
 *                          P9   X^2A = X          D3   X(A^+)^* = A^{F,core-EP} A
 */
enum class AxiomTag { P1, P2, P3E, P4F, P5, P6, P6k, P7, P8, P8k, P9, S1, S2k, S3, D1, D2k, D3 };

bool axiom_takes_power(AxiomTag tag);

class Axiom {
 public:
  /// Throws std::invalid_argument if the tag needs a power.
  Axiom(AxiomTag tag);  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument if the tag does not take a power.
  Axiom(AxiomTag tag, std::size_t k);

  AxiomTag tag() const { return tag_; }
  std::optional<std::size_t> k() const { return k_; }

  /// Short name, e.g. "P6k(k=2)".
  std::string label() const;
  /// The equation in text form, e.g. "XA^{k+1} = A^k".
  std::string equation() const;

  friend bool operator==(const Axiom&, const Axiom&) = default;

 private:
  AxiomTag tag_;
  std::optional<std::size_t> k_;
};

struct AxiomOutcome {
  Axiom axiom;
  double residual = 0.0;  // ||L - R||_F / (1 + ||L||_F + ||R||_F); +inf if not evaluable
  bool passed = false;
  double tolerance_used = 0.0;
};

struct AxiomReport {
  std::vector<AxiomOutcome> outcomes;

  bool all_passed() const;
  const AxiomOutcome* find(AxiomTag tag) const;
};

/**
 * Evaluates each requested axiom for the candidate X against A. Weights are
 * optional except where an axiom needs one (P3E and S3 need E, P4F and D3
 * need F); a missing weight throws PreconditionError.
 */
template <Scalar T>
AxiomReport check_axioms(const Matrix<T>& a, const Matrix<T>& x, std::span<const Axiom> axioms,
                         WeightPtr<T> e, WeightPtr<T> f,
                         const Tolerance& tol = Tolerance::for_backend<T>());

enum class InverseKind {
  moore_penrose,
  drazin,
  group,
  one_three_E,
  one_four_F,
  weighted_mp,
  weighted_core,
  weighted_dual_core,
  core_ep_E,
  dual_core_ep_F,
  star_core_ep,
  dual_core_ep_star,
};

inline constexpr InverseKind kAllInverseKinds[] = {
    InverseKind::moore_penrose,  InverseKind::drazin,         InverseKind::group,
    InverseKind::one_three_E,    InverseKind::one_four_F,     InverseKind::weighted_mp,
    InverseKind::weighted_core,  InverseKind::weighted_dual_core, InverseKind::core_ep_E,
    InverseKind::dual_core_ep_F, InverseKind::star_core_ep,   InverseKind::dual_core_ep_star,
};

/// CLI spelling, e.g. "core-ep", "dual-core-ep-star".
std::string_view to_string(InverseKind kind);
std::optional<InverseKind> parse_inverse_kind(std::string_view name);

/// Kinds defined for rectangular A as well (everything else needs square A).
bool kind_allows_rectangular(InverseKind kind);

/// The axiom bundle characterizing the kind; k is ind(A).
std::vector<Axiom> axiom_bundle(InverseKind kind, std::size_t k);

/**
 * Every kind whose full bundle X satisfies. An absent weight is taken as the
 * identity, so e.g. one_three_E then means {1,3}.
 */
template <Scalar T>
std::vector<InverseKind> classify_inverse(const Matrix<T>& a, const Matrix<T>& x, WeightPtr<T> e,
                                          WeightPtr<T> f, const Tolerance& tol = Tolerance::for_backend<T>());

/// R(M) = R(N), decided by rank([M | N]) = rank(M) = rank(N).
template <Scalar T>
bool range_equal(const Matrix<T>& m, const Matrix<T>& n, const Tolerance& tol = Tolerance::for_backend<T>());

/// N(M) = N(N), decided by rank([M ; N]) = rank(M) = rank(N).
template <Scalar T>
bool nullspace_equal(const Matrix<T>& m, const Matrix<T>& n, const Tolerance& tol = Tolerance::for_backend<T>());

/// A computed inverse together with its certificate.
template <Scalar T>
struct InverseResult {
  Matrix<T> value;
  InverseKind kind;
  std::size_t index_used = 0;  // k = ind(A)
  std::size_t power = 0;       // m >= k used by the construction
  std::string path;
  AxiomReport report;
};

}  // namespace wcep
