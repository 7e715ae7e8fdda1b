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

#include "wcep/core_ep.hpp"

namespace wcep {

std::string_view to_string(ConstructionPath path) {
  switch (path) {
    case ConstructionPath::thm_onethree_power: return "thm_onethree_power";
    case ConstructionPath::cor_weighted_mp: return "cor_weighted_mp";
    case ConstructionPath::prop_mp_of_power: return "prop_mp_of_power";
    case ConstructionPath::factor_sufficient: return "factor_sufficient";
  }
  return "unknown";
}

namespace {

template <Scalar T>
void require_square_weighted(const Matrix<T>& a, const Weight<T>& w, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square, got " + a.shape());
  if (w.size() != a.rows()) {
    throw DimensionError(std::string(op) + ": weight is " + w.matrix().shape() + " but A is " + a.shape());
  }
}

template <Scalar T>
Matrix<T> expect_value(std::optional<Matrix<T>> v, const char* what) {
  if (!v) throw InvariantViolation(std::string(what) + " unexpectedly does not exist");
  return *std::move(v);
}

template <Scalar T>
std::optional<Matrix<T>> value_of(std::optional<InverseResult<T>> r) {
  if (!r) return std::nullopt;
  return std::move(r->value);
}

template <Scalar T>
void expect_equal(const Matrix<T>& lhs, const Matrix<T>& rhs, const Tolerance& tol, const char* what) {
  if (!equal_within(lhs, rhs, tol)) throw InvariantViolation(std::string(what) + " does not hold");
}

template <Scalar T>
std::size_t resolve_power(std::size_t k, const CoreEpOptions& opts) {
  const std::size_t m = opts.power.value_or(k);
  if (m < k) {
    throw PreconditionError("construction power m = " + std::to_string(m) + " is below ind(A) = " + std::to_string(k));
  }
  return m;
}

}  // namespace

template <Scalar T>
std::optional<InverseResult<T>> core_ep(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol,
                                        CoreEpOptions opts) {
  require_square_weighted(a, e, "core_ep");
  const std::size_t n = a.rows();
  const std::size_t k = index(a, tol);
  const std::size_t m = resolve_power<T>(k, opts);
  const Matrix<T> am = matrix_power(a, m);

  std::optional<Matrix<T>> value;
  switch (opts.path) {
    case ConstructionPath::thm_onethree_power:
      if (auto y = one_three_E(am, e, tol)) value = drazin(a, tol) * am * *y;
      break;
    case ConstructionPath::cor_weighted_mp:
      if (auto w = weighted_mp(am, e, Weight<T>::identity(n), tol)) value = drazin(a, tol) * am * *w;
      break;
    case ConstructionPath::prop_mp_of_power:
      if (!e.positive_definite()) throw PreconditionError("core_ep: prop_mp_of_power needs a positive definite E");
      if (auto w = weighted_mp(Matrix<T>(am * a), e, Weight<T>::identity(n), tol)) value = am * *w;
      break;
    case ConstructionPath::factor_sufficient: {
      const Matrix<T> ams = am.conj_transpose();
      if (auto w = solve_right(Matrix<T>(ams * ams * e.matrix() * am), am, tol)) {
        value = drazin(a, tol) * am * am * w->conj_transpose() * e.matrix();
      }
      break;
    }
  }
  if (!value) return std::nullopt;

  const Axiom bundle[] = {Axiom(AxiomTag::P6k, k), AxiomTag::P7, AxiomTag::P3E};
  AxiomReport report = check_axioms(a, *value, bundle, &e, nullptr, tol);
  if (!report.all_passed()) throw InvariantViolation("core_ep: result failed its certificate");
  return InverseResult<T>{*std::move(value), InverseKind::core_ep_E, k, m, std::string(to_string(opts.path)),
                          std::move(report)};
}

template <Scalar T>
std::optional<InverseResult<T>> dual_core_ep(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol,
                                             CoreEpOptions opts) {
  require_square_weighted(a, f, "dual_core_ep");
  const std::size_t n = a.rows();
  const std::size_t k = index(a, tol);
  const std::size_t m = resolve_power<T>(k, opts);
  const Matrix<T> am = matrix_power(a, m);

  std::optional<Matrix<T>> value;
  switch (opts.path) {
    case ConstructionPath::thm_onethree_power:
      if (auto y = one_four_F(am, f, tol)) value = *y * am * drazin(a, tol);
      break;
    case ConstructionPath::cor_weighted_mp:
      if (auto w = weighted_mp(am, Weight<T>::identity(n), f, tol)) value = *w * am * drazin(a, tol);
      break;
    case ConstructionPath::prop_mp_of_power:
      if (!f.positive_definite()) throw PreconditionError("dual_core_ep: prop_mp_of_power needs a positive definite F");
      if (auto w = weighted_mp(Matrix<T>(am * a), Weight<T>::identity(n), f, tol)) value = *w * am;
      break;
    case ConstructionPath::factor_sufficient: {
      const Matrix<T> ams = am.conj_transpose();
      if (auto w = solve_left(Matrix<T>(am * f.inverse() * ams * ams), am, tol)) {
        value = f.inverse() * w->conj_transpose() * am * am * drazin(a, tol);
      }
      break;
    }
  }
  if (!value) return std::nullopt;

  const Axiom bundle[] = {Axiom(AxiomTag::P8k, k), AxiomTag::P9, AxiomTag::P4F};
  AxiomReport report = check_axioms(a, *value, bundle, nullptr, &f, tol);
  if (!report.all_passed()) throw InvariantViolation("dual_core_ep: result failed its certificate");
  return InverseResult<T>{*std::move(value), InverseKind::dual_core_ep_F, k, m, std::string(to_string(opts.path)),
                          std::move(report)};
}

template <Scalar T>
std::optional<Matrix<T>> weighted_core(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  require_square_weighted(a, e, "weighted_core");
  if (index(a, tol) > 1) return std::nullopt;
  auto y = one_three_E(a, e, tol);
  if (!y) return std::nullopt;
  Matrix<T> x = drazin(a, tol) * a * *y;
  const Axiom bundle[] = {AxiomTag::P6, AxiomTag::P7, AxiomTag::P3E};
  if (!check_axioms(a, x, bundle, &e, nullptr, tol).all_passed()) {
    throw InvariantViolation("weighted_core: result failed its certificate");
  }
  return x;
}

template <Scalar T>
std::optional<Matrix<T>> weighted_dual_core(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  require_square_weighted(a, f, "weighted_dual_core");
  if (index(a, tol) > 1) return std::nullopt;
  auto y = one_four_F(a, f, tol);
  if (!y) return std::nullopt;
  Matrix<T> x = *y * a * drazin(a, tol);
  const Axiom bundle[] = {AxiomTag::P8, AxiomTag::P9, AxiomTag::P4F};
  if (!check_axioms(a, x, bundle, nullptr, &f, tol).all_passed()) {
    throw InvariantViolation("weighted_dual_core: result failed its certificate");
  }
  return x;
}

template <Scalar T>
std::optional<Matrix<T>> core_ep_via_weighted_mp(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  require_square_weighted(a, e, "core_ep_via_weighted_mp");
  const std::size_t n = a.rows();
  const std::size_t m = index(a, tol);
  const Matrix<T> am = matrix_power(a, m);
  auto w = weighted_mp(am, e, Weight<T>::identity(n), tol);
  if (!w) return std::nullopt;
  Matrix<T> x = drazin(a, tol) * am * *w;

  auto reference = core_ep(a, e, tol);
  if (!reference) throw InvariantViolation("core_ep_via_weighted_mp: core_ep missing although (A^m)^+_{E,I} exists");
  expect_equal(x, reference->value, tol, "A^D A^m (A^m)^+_{E,I} = core_ep(A, E)");
  if (e.positive_definite()) {
    const Matrix<T> alt = am * expect_value(weighted_mp(Matrix<T>(am * a), e, Weight<T>::identity(n), tol),
                                            "(A^{m+1})^+_{E,I}");
    expect_equal(alt, x, tol, "A^m (A^{m+1})^+_{E,I} = A^D A^m (A^m)^+_{E,I}");
  }
  return x;
}

template <Scalar T>
Matrix<T> core_ep_from_factorization(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& witness,
                                     const Tolerance& tol) {
  require_square_weighted(a, e, "core_ep_from_factorization");
  const std::size_t k = index(a, tol);
  const Matrix<T> ak = matrix_power(a, k);
  const Matrix<T> aks = ak.conj_transpose();
  if (witness.rows() != a.rows() || witness.cols() != a.cols() ||
      !equal_within(ak, Matrix<T>(witness * aks * aks * e.matrix() * ak), tol)) {
    throw PreconditionError("core_ep_from_factorization: witness does not satisfy A^k = W((A^k)^*)^2 E A^k");
  }
  Matrix<T> x = drazin(a, tol) * ak * ak * witness.conj_transpose() * e.matrix();
  auto reference = core_ep(a, e, tol);
  if (!reference) throw InvariantViolation("core_ep_from_factorization: core_ep missing although a witness exists");
  expect_equal(x, reference->value, tol, "A^D A^{2k} W^* E = core_ep(A, E)");
  return x;
}

template <Scalar T>
Matrix<T> dual_core_ep_from_factorization(const Matrix<T>& a, const Weight<T>& f, const Matrix<T>& witness,
                                          const Tolerance& tol) {
  require_square_weighted(a, f, "dual_core_ep_from_factorization");
  const std::size_t k = index(a, tol);
  const Matrix<T> ak = matrix_power(a, k);
  const Matrix<T> aks = ak.conj_transpose();
  if (witness.rows() != a.rows() || witness.cols() != a.cols() ||
      !equal_within(ak, Matrix<T>(ak * f.inverse() * aks * aks * witness), tol)) {
    throw PreconditionError("dual_core_ep_from_factorization: witness does not satisfy A^k = A^k F^{-1}((A^k)^*)^2 W");
  }
  Matrix<T> x = f.inverse() * witness.conj_transpose() * ak * ak * drazin(a, tol);
  auto reference = dual_core_ep(a, f, tol);
  if (!reference) throw InvariantViolation("dual_core_ep_from_factorization: dual_core_ep missing");
  expect_equal(x, reference->value, tol, "F^{-1} W^* A^{2k} A^D = dual_core_ep(A, F)");
  return x;
}

template <Scalar T>
Matrix<T> drazin_from_core_ep(const Matrix<T>& a, const Matrix<T>& x, std::size_t m, const Tolerance& tol) {
  if (m < index(a, tol)) throw PreconditionError("drazin_from_core_ep: m must be at least ind(A)");
  return matrix_power(x, m + 1) * matrix_power(a, m);
}

template <Scalar T>
Matrix<T> drazin_from_dual_core_ep(const Matrix<T>& a, const Matrix<T>& x, std::size_t m, const Tolerance& tol) {
  if (m < index(a, tol)) throw PreconditionError("drazin_from_dual_core_ep: m must be at least ind(A)");
  return matrix_power(a, m) * matrix_power(x, m + 1);
}

template <Scalar T>
std::optional<Matrix<T>> core_ep_power(const Matrix<T>& a, const Weight<T>& e, std::size_t l, const Tolerance& tol) {
  if (l == 0) throw PreconditionError("core_ep_power: l must be positive");
  auto x = core_ep(a, e, tol);
  if (!x) return std::nullopt;
  Matrix<T> r = expect_value(value_of(core_ep(matrix_power(a, l), e, tol)),
                             "(A^l)^{core-EP,E}");
  expect_equal(r, matrix_power(x->value, l), tol, "(A^l)^{core-EP,E} = (A^{core-EP,E})^l");
  expect_equal(Matrix<T>(matrix_power(a, l - 1) * r), x->value, tol, "A^{l-1}(A^l)^{core-EP,E} = A^{core-EP,E}");
  return r;
}

template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_power(const Matrix<T>& a, const Weight<T>& f, std::size_t l,
                                            const Tolerance& tol) {
  if (l == 0) throw PreconditionError("dual_core_ep_power: l must be positive");
  auto x = dual_core_ep(a, f, tol);
  if (!x) return std::nullopt;
  Matrix<T> r = expect_value(value_of(dual_core_ep(matrix_power(a, l), f, tol)),
                             "(A^l)^{F,core-EP}");
  expect_equal(r, matrix_power(x->value, l), tol, "(A^l)^{F,core-EP} = (A^{F,core-EP})^l");
  expect_equal(Matrix<T>(r * matrix_power(a, l - 1)), x->value, tol, "(A^l)^{F,core-EP}A^{l-1} = A^{F,core-EP}");
  return r;
}

template <Scalar T>
std::optional<Matrix<T>> core_ep_of_core_ep(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  auto x = core_ep(a, e, tol);
  if (!x) return std::nullopt;
  Matrix<T> r = a * a * x->value;
  auto direct = core_ep(x->value, e, tol);
  if (!direct) throw InvariantViolation("core_ep_of_core_ep: the inverse of the inverse does not exist");
  expect_equal(r, direct->value, tol, "(A^{core-EP,E})^{core-EP,E} = A^2 A^{core-EP,E}");
  return r;
}

template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_of_dual_core_ep(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  auto x = dual_core_ep(a, f, tol);
  if (!x) return std::nullopt;
  Matrix<T> r = x->value * a * a;
  auto direct = dual_core_ep(x->value, f, tol);
  if (!direct) throw InvariantViolation("dual_core_ep_of_dual_core_ep: the inverse of the inverse does not exist");
  expect_equal(r, direct->value, tol, "(A^{F,core-EP})^{F,core-EP} = A^{F,core-EP} A^2");
  return r;
}

namespace {

template <Scalar T>
void require_same_square(const Matrix<T>& a, const Matrix<T>& b, const char* op) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": A and B must be square of equal size, got " + a.shape() + " and " +
                         b.shape());
  }
}

template <Scalar T>
std::vector<std::string> commuting_zero_products(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol) {
  const double scale = a.frobenius_norm() * b.frobenius_norm();
  std::vector<std::string> failed;
  if (!negligible(Matrix<T>(a * b), scale, tol)) failed.emplace_back("AB = O");
  if (!negligible(Matrix<T>(b * a), scale, tol)) failed.emplace_back("BA = O");
  return failed;
}

/// Shared tail of the additive laws: combine the parts and check them against
/// the inverse of A + B and A - B computed directly.
template <Scalar T, class Invert>
AdditiveOutcome<T> additive_law(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol, Invert invert,
                                const char* name) {
  std::optional<Matrix<T>> xa = invert(a);
  std::optional<Matrix<T>> xb = invert(b);
  if (!xa || !xb) return NoExist{};
  AdditiveLaw<T> law{*xa + *xb, *xa - *xb};
  const std::string label(name);
  expect_equal(law.sum, expect_value(invert(Matrix<T>(a + b)), (label + " of A + B").c_str()), tol,
               (label + " sum law").c_str());
  expect_equal(law.difference, expect_value(invert(Matrix<T>(a - b)), (label + " of A - B").c_str()), tol,
               (label + " difference law").c_str());
  return law;
}

}  // namespace

template <Scalar T>
AdditiveOutcome<T> additive_core_ep(const Matrix<T>& a, const Matrix<T>& b, const Weight<T>& e,
                                    const Tolerance& tol) {
  require_same_square(a, b, "additive_core_ep");
  require_square_weighted(a, e, "additive_core_ep");
  HypothesisFailed hyp;
  const double scale = a.frobenius_norm() * e.matrix().frobenius_norm() * b.frobenius_norm();
  if (!negligible(Matrix<T>(a.conj_transpose() * e.matrix() * b), scale, tol)) hyp.failed.emplace_back("A*EB = O");
  for (auto& f : commuting_zero_products(a, b, tol)) hyp.failed.push_back(std::move(f));
  if (!hyp.failed.empty()) return hyp;
  return additive_law<T>(
      a, b, tol,
      [&](const Matrix<T>& m) { return value_of(core_ep(m, e, tol)); },
      "core_ep");
}

template <Scalar T>
AdditiveOutcome<T> additive_dual_core_ep(const Matrix<T>& a, const Matrix<T>& b, const Weight<T>& f,
                                         const Tolerance& tol) {
  require_same_square(a, b, "additive_dual_core_ep");
  require_square_weighted(a, f, "additive_dual_core_ep");
  HypothesisFailed hyp;
  const double scale = a.frobenius_norm() * f.inverse().frobenius_norm() * b.frobenius_norm();
  if (!negligible(Matrix<T>(a * f.inverse() * b.conj_transpose()), scale, tol)) {
    hyp.failed.emplace_back("AF^{-1}B* = O");
  }
  for (auto& msg : commuting_zero_products(a, b, tol)) hyp.failed.push_back(std::move(msg));
  if (!hyp.failed.empty()) return hyp;
  return additive_law<T>(
      a, b, tol,
      [&](const Matrix<T>& m) { return value_of(dual_core_ep(m, f, tol)); },
      "dual_core_ep");
}

template <Scalar T>
AdditiveOutcome<T> additive_drazin(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol) {
  require_same_square(a, b, "additive_drazin");
  HypothesisFailed hyp{commuting_zero_products(a, b, tol)};
  if (!hyp.failed.empty()) return hyp;
  return additive_law<T>(
      a, b, tol, [&](const Matrix<T>& m) { return std::optional<Matrix<T>>(drazin(m, tol)); }, "drazin");
}

#define WCEP_INSTANTIATE(T)                                                                                        \
  template std::optional<InverseResult<T>> core_ep(const Matrix<T>&, const Weight<T>&, const Tolerance&,         \
                                                   CoreEpOptions);                                               \
  template std::optional<InverseResult<T>> dual_core_ep(const Matrix<T>&, const Weight<T>&, const Tolerance&,    \
                                                        CoreEpOptions);                                          \
  template std::optional<Matrix<T>> weighted_core(const Matrix<T>&, const Weight<T>&, const Tolerance&);         \
  template std::optional<Matrix<T>> weighted_dual_core(const Matrix<T>&, const Weight<T>&, const Tolerance&);    \
  template std::optional<Matrix<T>> core_ep_via_weighted_mp(const Matrix<T>&, const Weight<T>&, const Tolerance&); \
  template Matrix<T> core_ep_from_factorization(const Matrix<T>&, const Weight<T>&, const Matrix<T>&,            \
                                                const Tolerance&);                                               \
  template Matrix<T> dual_core_ep_from_factorization(const Matrix<T>&, const Weight<T>&, const Matrix<T>&,       \
                                                     const Tolerance&);                                          \
  template Matrix<T> drazin_from_core_ep(const Matrix<T>&, const Matrix<T>&, std::size_t, const Tolerance&);      \
  template Matrix<T> drazin_from_dual_core_ep(const Matrix<T>&, const Matrix<T>&, std::size_t, const Tolerance&); \
  template std::optional<Matrix<T>> core_ep_power(const Matrix<T>&, const Weight<T>&, std::size_t,               \
                                                  const Tolerance&);                                             \
  template std::optional<Matrix<T>> dual_core_ep_power(const Matrix<T>&, const Weight<T>&, std::size_t,          \
                                                       const Tolerance&);                                        \
  template std::optional<Matrix<T>> core_ep_of_core_ep(const Matrix<T>&, const Weight<T>&, const Tolerance&);    \
  template std::optional<Matrix<T>> dual_core_ep_of_dual_core_ep(const Matrix<T>&, const Weight<T>&,             \
                                                                 const Tolerance&);                              \
  template AdditiveOutcome<T> additive_core_ep(const Matrix<T>&, const Matrix<T>&, const Weight<T>&,             \
                                               const Tolerance&);                                                \
  template AdditiveOutcome<T> additive_dual_core_ep(const Matrix<T>&, const Matrix<T>&, const Weight<T>&,        \
                                                    const Tolerance&);                                           \
  template AdditiveOutcome<T> additive_drazin(const Matrix<T>&, const Matrix<T>&, const Tolerance&);

WCEP_INSTANTIATE(GaussianRational)
WCEP_INSTANTIATE(Complex)

#undef WCEP_INSTANTIATE

}  // namespace wcep
