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

#include "wcep/star.hpp"

#include "wcep/classical.hpp"
#include "wcep/errors.hpp"

namespace wcep {

namespace {

template <Scalar T>
void require_square(const Matrix<T>& a, std::size_t weight_size, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square, got " + a.shape());
  if (weight_size != a.rows()) throw DimensionError(std::string(op) + ": weight size does not match A");
}

template <Scalar T>
void require_candidate(const Matrix<T>& a, const Matrix<T>& x, const char* op) {
  if (x.rows() != a.rows() || x.cols() != a.cols()) {
    throw DimensionError(std::string(op) + ": candidate is " + x.shape() + " but A is " + a.shape());
  }
}

template <Scalar T>
std::optional<Matrix<T>> core_ep_value(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  auto r = core_ep(a, e, tol);
  if (!r) return std::nullopt;
  return std::move(r->value);
}

template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_value(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  auto r = dual_core_ep(a, f, tol);
  if (!r) return std::nullopt;
  return std::move(r->value);
}

template <Scalar T>
StarSystemReport system_report(const Matrix<T>& a, const Matrix<T>& x, InverseKind kind, WeightPtr<T> e,
                               WeightPtr<T> f, const Tolerance& tol) {
  const std::vector<Axiom> bundle = axiom_bundle(kind, index(a, tol));
  const AxiomReport report = check_axioms(a, x, bundle, e, f, tol);
  StarSystemReport out;
  out.side = kind == InverseKind::star_core_ep ? StarSide::star_core_ep : StarSide::dual_core_ep_star;
  for (const auto& o : report.outcomes) out.residuals[o.axiom.equation()] = o.residual;
  out.unique_solution = report.all_passed();
  return out;
}

template <Scalar T>
ProjectorReport<T> projector_report(Matrix<T> p, const Matrix<T>& range_target, const Matrix<T>& null_target,
                                    const Tolerance& tol) {
  ProjectorReport<T> r;
  const Matrix<T> p2 = p * p;
  r.idempotency_residual = relative_residual(p2, p);
  r.idempotent = equal_within(p2, p, tol);
  r.range_target_met = range_equal(p, range_target, tol);
  r.nullspace_target_met = nullspace_equal(p, null_target, tol);
  r.projector = std::move(p);
  return r;
}

}  // namespace

template <Scalar T>
std::optional<Matrix<T>> star_core_ep(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  require_square(a, e.size(), "star_core_ep");
  auto c = core_ep_value(a, e, tol);
  if (!c) return std::nullopt;
  return a.conj_transpose() * a * *c;
}

template <Scalar T>
std::optional<Matrix<T>> dual_core_ep_star(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  require_square(a, f.size(), "dual_core_ep_star");
  auto d = dual_core_ep_value(a, f, tol);
  if (!d) return std::nullopt;
  return *d * a * a.conj_transpose();
}

template <Scalar T>
StarSystemReport verify_star_system(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& x,
                                    const Tolerance& tol) {
  require_square(a, e.size(), "verify_star_system");
  return system_report<T>(a, x, InverseKind::star_core_ep, &e, nullptr, tol);
}

template <Scalar T>
StarSystemReport verify_dual_star_system(const Matrix<T>& a, const Weight<T>& f, const Matrix<T>& y,
                                         const Tolerance& tol) {
  require_square(a, f.size(), "verify_dual_star_system");
  return system_report<T>(a, y, InverseKind::dual_core_ep_star, nullptr, &f, tol);
}

template <Scalar T>
std::optional<std::array<bool, 10>> star_equivalences(const Matrix<T>& a, const Weight<T>& e, const Matrix<T>& x,
                                                      const Tolerance& tol) {
  require_square(a, e.size(), "star_equivalences");
  require_candidate(a, x, "star_equivalences");
  auto cv = core_ep_value(a, e, tol);
  if (!cv) return std::nullopt;
  const Matrix<T>& c = *cv;
  const Matrix<T> as = a.conj_transpose();
  const Matrix<T> p = moore_penrose(a, tol);
  const Matrix<T> ps = p.conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  const Matrix<T> cap = c * a * ps;  // C A (A^+)^*
  auto eq = [&](const Matrix<T>& l, const Matrix<T>& r) { return equal_within(l, r, tol); };

  const bool xac = eq(x * a * c, x);
  const bool pax = eq(p * a * x, x);
  const bool ix = eq(x * cap * x, x) && eq(cap * x, a * c) && eq(x * cap, as * cap);
  return std::array<bool, 10>{
      eq(x, as * a * c),
      xac && eq(x * ak, as * ak),
      eq(p * a * x * a * c, x) && eq(ps * x * ak, ak),
      xac && eq(x * a, as * a * c * a),
      xac && eq(x * ps, as * a * c * ps),
      pax && eq(ps * x, a * c),
      pax && eq(p * ps * x, p * a * c),
      pax && eq(a * x, a * as * a * c),
      ix,
      ix && eq(cap * x * cap, cap),
  };
}

template <Scalar T>
std::optional<std::array<bool, 10>> dual_star_equivalences(const Matrix<T>& a, const Weight<T>& f,
                                                           const Matrix<T>& y, const Tolerance& tol) {
  require_square(a, f.size(), "dual_star_equivalences");
  require_candidate(a, y, "dual_star_equivalences");
  auto dv = dual_core_ep_value(a, f, tol);
  if (!dv) return std::nullopt;
  const Matrix<T>& d = *dv;
  const Matrix<T> as = a.conj_transpose();
  const Matrix<T> p = moore_penrose(a, tol);
  const Matrix<T> ps = p.conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  const Matrix<T> pad = ps * a * d;  // (A^+)^* A D
  auto eq = [&](const Matrix<T>& l, const Matrix<T>& r) { return equal_within(l, r, tol); };

  const bool day = eq(d * a * y, y);
  const bool yap = eq(y * a * p, y);
  const bool ix = eq(y * pad * y, y) && eq(y * pad, d * a) && eq(pad * y, pad * as);
  return std::array<bool, 10>{
      eq(y, d * a * as),
      day && eq(ak * y, ak * as),
      eq(d * a * y * a * p, y) && eq(ak * y * ps, ak),
      day && eq(a * y, a * d * a * as),
      day && eq(ps * y, ps * d * a * as),
      yap && eq(y * ps, d * a),
      yap && eq(y * ps * p, d * a * p),
      yap && eq(y * a, d * a * as * a),
      ix,
      ix && eq(pad * y * pad, pad),
  };
}

template <Scalar T>
std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> star_projectors(const Matrix<T>& a,
                                                                                 const Weight<T>& e,
                                                                                 const Tolerance& tol) {
  require_square(a, e.size(), "star_projectors");
  auto cv = core_ep_value(a, e, tol);
  if (!cv) return std::nullopt;
  const Matrix<T>& c = *cv;
  const Matrix<T> x = a.conj_transpose() * a * c;
  const Matrix<T> ps = moore_penrose(a, tol).conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  return std::pair{projector_report(Matrix<T>(ps * x), ak, c, tol),
                   projector_report(Matrix<T>(x * ps), Matrix<T>(a.conj_transpose() * ak), Matrix<T>(c * ps), tol)};
}

template <Scalar T>
std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> dual_star_projectors(const Matrix<T>& a,
                                                                                      const Weight<T>& f,
                                                                                      const Tolerance& tol) {
  require_square(a, f.size(), "dual_star_projectors");
  auto dv = dual_core_ep_value(a, f, tol);
  if (!dv) return std::nullopt;
  const Matrix<T>& d = *dv;
  const Matrix<T> y = d * a * a.conj_transpose();
  const Matrix<T> ps = moore_penrose(a, tol).conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  return std::pair{projector_report(Matrix<T>(y * ps), d, ak, tol),
                   projector_report(Matrix<T>(ps * y), Matrix<T>(ps * d), Matrix<T>(ak * a.conj_transpose()), tol)};
}

template <Scalar T>
std::optional<bool> outer_inverse_identity(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  require_square(a, e.size(), "outer_inverse_identity");
  auto cv = core_ep_value(a, e, tol);
  if (!cv) return std::nullopt;
  const Matrix<T> x = a.conj_transpose() * a * *cv;
  const Matrix<T> ps = moore_penrose(a, tol).conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  return equal_within(Matrix<T>(x * ps * x), x, tol) && range_equal(x, Matrix<T>(a.conj_transpose() * ak), tol) &&
         nullspace_equal(x, *cv, tol);
}

template <Scalar T>
std::optional<bool> dual_outer_inverse_identity(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  require_square(a, f.size(), "dual_outer_inverse_identity");
  auto dv = dual_core_ep_value(a, f, tol);
  if (!dv) return std::nullopt;
  const Matrix<T> y = *dv * a * a.conj_transpose();
  const Matrix<T> ps = moore_penrose(a, tol).conj_transpose();
  const Matrix<T> ak = matrix_power(a, index(a, tol));
  return equal_within(Matrix<T>(y * ps * y), y, tol) && range_equal(y, *dv, tol) &&
         nullspace_equal(y, Matrix<T>(ak * a.conj_transpose()), tol);
}

#define WCEP_INSTANTIATE(T)                                                                                        \
  template std::optional<Matrix<T>> star_core_ep(const Matrix<T>&, const Weight<T>&, const Tolerance&);          \
  template std::optional<Matrix<T>> dual_core_ep_star(const Matrix<T>&, const Weight<T>&, const Tolerance&);     \
  template StarSystemReport verify_star_system(const Matrix<T>&, const Weight<T>&, const Matrix<T>&,             \
                                               const Tolerance&);                                                \
  template StarSystemReport verify_dual_star_system(const Matrix<T>&, const Weight<T>&, const Matrix<T>&,        \
                                                    const Tolerance&);                                           \
  template std::optional<std::array<bool, 10>> star_equivalences(const Matrix<T>&, const Weight<T>&,             \
                                                                 const Matrix<T>&, const Tolerance&);            \
  template std::optional<std::array<bool, 10>> dual_star_equivalences(const Matrix<T>&, const Weight<T>&,        \
                                                                      const Matrix<T>&, const Tolerance&);       \
  template std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> star_projectors(                     \
      const Matrix<T>&, const Weight<T>&, const Tolerance&);                                                     \
  template std::optional<std::pair<ProjectorReport<T>, ProjectorReport<T>>> dual_star_projectors(                \
      const Matrix<T>&, const Weight<T>&, const Tolerance&);                                                     \
  template std::optional<bool> outer_inverse_identity(const Matrix<T>&, const Weight<T>&, const Tolerance&);     \
  template std::optional<bool> dual_outer_inverse_identity(const Matrix<T>&, const Weight<T>&, const Tolerance&);

WCEP_INSTANTIATE(GaussianRational)
WCEP_INSTANTIATE(Complex)

#undef WCEP_INSTANTIATE

}  // namespace wcep
