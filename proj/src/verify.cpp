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

#include "wcep/verify.hpp"

#include <limits>
#include <stdexcept>

#include "wcep/classical.hpp"
#include "wcep/core_ep.hpp"
#include "wcep/errors.hpp"

namespace wcep {

bool axiom_takes_power(AxiomTag tag) {
  return tag == AxiomTag::P6k || tag == AxiomTag::P8k || tag == AxiomTag::S2k || tag == AxiomTag::D2k;
}

Axiom::Axiom(AxiomTag tag) : tag_(tag) {
  if (axiom_takes_power(tag)) throw std::invalid_argument("axiom " + label() + " needs a power k");
}

Axiom::Axiom(AxiomTag tag, std::size_t k) : tag_(tag), k_(k) {
  if (!axiom_takes_power(tag)) {
    k_.reset();
    throw std::invalid_argument("axiom " + label() + " does not take a power");
  }
}

namespace {

std::string_view tag_name(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::P1: return "P1";
    case AxiomTag::P2: return "P2";
    case AxiomTag::P3E: return "P3E";
    case AxiomTag::P4F: return "P4F";
    case AxiomTag::P5: return "P5";
    case AxiomTag::P6: return "P6";
    case AxiomTag::P6k: return "P6k";
    case AxiomTag::P7: return "P7";
    case AxiomTag::P8: return "P8";
    case AxiomTag::P8k: return "P8k";
    case AxiomTag::P9: return "P9";
    case AxiomTag::S1: return "S1";
    case AxiomTag::S2k: return "S2k";
    case AxiomTag::S3: return "S3";
    case AxiomTag::D1: return "D1";
    case AxiomTag::D2k: return "D2k";
    case AxiomTag::D3: return "D3";
  }
  return "?";
}

}  // namespace

std::string Axiom::label() const {
  std::string out(tag_name(tag_));
  if (k_) out += "(k=" + std::to_string(*k_) + ")";
  return out;
}

std::string Axiom::equation() const {
  switch (tag_) {
    case AxiomTag::P1: return "AXA = A";
    case AxiomTag::P2: return "XAX = X";
    case AxiomTag::P3E: return "(EAX)^* = EAX";
    case AxiomTag::P4F: return "(FXA)^* = FXA";
    case AxiomTag::P5: return "AX = XA";
    case AxiomTag::P6: return "XA^2 = A";
    case AxiomTag::P6k: return "XA^{k+1} = A^k";
    case AxiomTag::P7: return "AX^2 = X";
    case AxiomTag::P8: return "A^2X = A";
    case AxiomTag::P8k: return "A^{k+1}X = A^k";
    case AxiomTag::P9: return "X^2A = X";
    case AxiomTag::S1: return "X(A^+)^*X = X";
    case AxiomTag::S2k: return "XA^k = A^*A^k";
    case AxiomTag::S3: return "(A^+)^*X = AA^{core-EP,E}";
    case AxiomTag::D1: return "X(A^+)^*X = X";
    case AxiomTag::D2k: return "A^kX = A^kA^*";
    case AxiomTag::D3: return "X(A^+)^* = A^{F,core-EP}A";
  }
  return "";
}

bool AxiomReport::all_passed() const {
  for (const auto& o : outcomes) {
    if (!o.passed) return false;
  }
  return true;
}

const AxiomOutcome* AxiomReport::find(AxiomTag tag) const {
  for (const auto& o : outcomes) {
    if (o.axiom.tag() == tag) return &o;
  }
  return nullptr;
}

namespace {

constexpr double kNotEvaluable = std::numeric_limits<double>::infinity();

/// Lazily computed quantities shared by the axioms of one report.
template <Scalar T>
class AxiomContext {
 public:
  AxiomContext(const Matrix<T>& a, WeightPtr<T> e, WeightPtr<T> f, const Tolerance& tol)
      : a_(a), e_(e), f_(f), tol_(tol) {}

  const Matrix<T>& pinv_star() {
    if (!pinv_star_) pinv_star_ = moore_penrose(a_, tol_).conj_transpose();
    return *pinv_star_;
  }

  const std::optional<Matrix<T>>& core_ep_ref() {
    if (!core_ep_done_) {
      core_ep_done_ = true;
      if (auto r = core_ep(a_, *e_, tol_)) core_ep_ = std::move(r->value);
    }
    return core_ep_;
  }

  const std::optional<Matrix<T>>& dual_core_ep_ref() {
    if (!dual_done_) {
      dual_done_ = true;
      if (auto r = dual_core_ep(a_, *f_, tol_)) dual_ = std::move(r->value);
    }
    return dual_;
  }

 private:
  const Matrix<T>& a_;
  const Weight<T>* e_;
  const Weight<T>* f_;
  const Tolerance& tol_;
  std::optional<Matrix<T>> pinv_star_;
  bool core_ep_done_ = false;
  std::optional<Matrix<T>> core_ep_;
  bool dual_done_ = false;
  std::optional<Matrix<T>> dual_;
};

bool needs_square(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::P1:
    case AxiomTag::P2:
    case AxiomTag::P3E:
    case AxiomTag::P4F:
      return false;
    default:
      return true;
  }
}

template <Scalar T>
double evaluate(const Axiom& ax, const Matrix<T>& a, const Matrix<T>& x, const Weight<T>* e, const Weight<T>* f,
                AxiomContext<T>& ctx) {
  if (needs_square(ax.tag()) && !a.is_square()) return kNotEvaluable;
  const std::size_t k = ax.k().value_or(0);
  auto res = [](const Matrix<T>& l, const Matrix<T>& r) { return relative_residual(l, r); };
  switch (ax.tag()) {
    case AxiomTag::P1: return res(a * x * a, a);
    case AxiomTag::P2: return res(x * a * x, x);
    case AxiomTag::P3E: {
      const Matrix<T> m = e->matrix() * a * x;
      return res(m.conj_transpose(), m);
    }
    case AxiomTag::P4F: {
      const Matrix<T> m = f->matrix() * x * a;
      return res(m.conj_transpose(), m);
    }
    case AxiomTag::P5: return res(a * x, x * a);
    case AxiomTag::P6: return res(x * a * a, a);
    case AxiomTag::P6k: return res(x * matrix_power(a, k + 1), matrix_power(a, k));
    case AxiomTag::P7: return res(a * x * x, x);
    case AxiomTag::P8: return res(a * a * x, a);
    case AxiomTag::P8k: return res(matrix_power(a, k + 1) * x, matrix_power(a, k));
    case AxiomTag::P9: return res(x * x * a, x);
    case AxiomTag::S1:
    case AxiomTag::D1: return res(x * ctx.pinv_star() * x, x);
    case AxiomTag::S2k: {
      const Matrix<T> ak = matrix_power(a, k);
      return res(x * ak, a.conj_transpose() * ak);
    }
    case AxiomTag::D2k: {
      const Matrix<T> ak = matrix_power(a, k);
      return res(ak * x, ak * a.conj_transpose());
    }
    case AxiomTag::S3: {
      const auto& c = ctx.core_ep_ref();
      if (!c) return kNotEvaluable;
      return res(ctx.pinv_star() * x, a * *c);
    }
    case AxiomTag::D3: {
      const auto& c = ctx.dual_core_ep_ref();
      if (!c) return kNotEvaluable;
      return res(x * ctx.pinv_star(), *c * a);
    }
  }
  return kNotEvaluable;
}

bool needs_e(AxiomTag tag) { return tag == AxiomTag::P3E || tag == AxiomTag::S3; }
bool needs_f(AxiomTag tag) { return tag == AxiomTag::P4F || tag == AxiomTag::D3; }

}  // namespace

template <Scalar T>
AxiomReport check_axioms(const Matrix<T>& a, const Matrix<T>& x, std::span<const Axiom> axioms,
                         WeightPtr<T> e, WeightPtr<T> f, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("check_axioms: candidate is " + x.shape() + " but A is " + a.shape());
  }
  if (e && e->size() != a.rows()) throw DimensionError("check_axioms: E does not match the rows of A");
  if (f && f->size() != a.cols()) throw DimensionError("check_axioms: F does not match the columns of A");

  AxiomContext<T> ctx(a, e, f, tol);
  AxiomReport report;
  report.outcomes.reserve(axioms.size());
  for (const Axiom& ax : axioms) {
    if (needs_e(ax.tag()) && !e) throw PreconditionError("axiom " + ax.label() + " needs the weight E");
    if (needs_f(ax.tag()) && !f) throw PreconditionError("axiom " + ax.label() + " needs the weight F");
    const double r = evaluate(ax, a, x, e, f, ctx);
    const bool passed = is_exact_v<T> ? r == 0.0 : r <= tol.residual_rel;
    report.outcomes.push_back({ax, r, passed, tol.residual_rel});
  }
  return report;
}

std::string_view to_string(InverseKind kind) {
  switch (kind) {
    case InverseKind::moore_penrose: return "moore-penrose";
    case InverseKind::drazin: return "drazin";
    case InverseKind::group: return "group";
    case InverseKind::one_three_E: return "one-three-e";
    case InverseKind::one_four_F: return "one-four-f";
    case InverseKind::weighted_mp: return "weighted-mp";
    case InverseKind::weighted_core: return "weighted-core";
    case InverseKind::weighted_dual_core: return "weighted-dual-core";
    case InverseKind::core_ep_E: return "core-ep";
    case InverseKind::dual_core_ep_F: return "dual-core-ep";
    case InverseKind::star_core_ep: return "star-core-ep";
    case InverseKind::dual_core_ep_star: return "dual-core-ep-star";
  }
  return "unknown";
}

std::optional<InverseKind> parse_inverse_kind(std::string_view name) {
  for (InverseKind kind : kAllInverseKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool kind_allows_rectangular(InverseKind kind) {
  return kind == InverseKind::moore_penrose || kind == InverseKind::one_three_E ||
         kind == InverseKind::one_four_F || kind == InverseKind::weighted_mp;
}

std::vector<Axiom> axiom_bundle(InverseKind kind, std::size_t k) {
  using enum AxiomTag;
  switch (kind) {
    case InverseKind::moore_penrose:
    case InverseKind::weighted_mp: return {P1, P2, P3E, P4F};
    case InverseKind::drazin: return {Axiom(P6k, k), P2, P5};
    case InverseKind::group: return {P1, P2, P5};
    case InverseKind::one_three_E: return {P1, P3E};
    case InverseKind::one_four_F: return {P1, P4F};
    case InverseKind::weighted_core: return {P6, P7, P3E};
    case InverseKind::weighted_dual_core: return {P8, P9, P4F};
    case InverseKind::core_ep_E: return {Axiom(P6k, k), P7, P3E};
    case InverseKind::dual_core_ep_F: return {Axiom(P8k, k), P9, P4F};
    case InverseKind::star_core_ep: return {S1, Axiom(S2k, k), S3};
    case InverseKind::dual_core_ep_star: return {D1, Axiom(D2k, k), D3};
  }
  return {};
}

template <Scalar T>
std::vector<InverseKind> classify_inverse(const Matrix<T>& a, const Matrix<T>& x, WeightPtr<T> e,
                                          WeightPtr<T> f, const Tolerance& tol) {
  const Weight<T> ie = Weight<T>::identity(a.rows());
  const Weight<T> jf = Weight<T>::identity(a.cols());
  const Weight<T>* ew = e ? e : &ie;
  const Weight<T>* fw = f ? f : &jf;
  const std::size_t k = a.is_square() ? index(a, tol) : 0;

  std::vector<InverseKind> kinds;
  for (InverseKind kind : kAllInverseKinds) {
    if (!a.is_square() && !kind_allows_rectangular(kind)) continue;
    const std::vector<Axiom> bundle = axiom_bundle(kind, k);
    // Moore-Penrose is always the unweighted one.
    const bool unweighted = kind == InverseKind::moore_penrose;
    if (check_axioms(a, x, bundle, unweighted ? &ie : ew, unweighted ? &jf : fw, tol).all_passed()) {
      kinds.push_back(kind);
    }
  }
  return kinds;
}

template <Scalar T>
bool range_equal(const Matrix<T>& m, const Matrix<T>& n, const Tolerance& tol) {
  if (m.rows() != n.rows()) throw DimensionError("range_equal: " + m.shape() + " vs " + n.shape());
  const std::size_t rm = rank(m, tol);
  return rm == rank(n, tol) && rm == rank(hstack(m, n), tol);
}

template <Scalar T>
bool nullspace_equal(const Matrix<T>& m, const Matrix<T>& n, const Tolerance& tol) {
  if (m.cols() != n.cols()) throw DimensionError("nullspace_equal: " + m.shape() + " vs " + n.shape());
  const std::size_t rm = rank(m, tol);
  return rm == rank(n, tol) && rm == rank(vstack(m, n), tol);
}

#define WCEP_INSTANTIATE(T)                                                                                       \
  template AxiomReport check_axioms(const Matrix<T>&, const Matrix<T>&, std::span<const Axiom>, const Weight<T>*, \
                                    const Weight<T>*, const Tolerance&);                                         \
  template std::vector<InverseKind> classify_inverse(const Matrix<T>&, const Matrix<T>&, const Weight<T>*,       \
                                                     const Weight<T>*, const Tolerance&);                        \
  template bool range_equal(const Matrix<T>&, const Matrix<T>&, const Tolerance&);                               \
  template bool nullspace_equal(const Matrix<T>&, const Matrix<T>&, const Tolerance&);

WCEP_INSTANTIATE(GaussianRational)
WCEP_INSTANTIATE(Complex)

#undef WCEP_INSTANTIATE

}  // namespace wcep
