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

#include "wcep/classical.hpp"

#include <vector>

#include "float_backend.hpp"

namespace wcep {

namespace {

template <Scalar T>
Matrix<T> invert_or_throw(const Matrix<T>& m, const Tolerance& tol, const char* what) {
  auto inv = inverse(m, tol);
  if (!inv) throw InvariantViolation(std::string(what) + ": expected a nonsingular matrix");
  return *std::move(inv);
}

template <Scalar T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square, got " + a.shape());
}

}  // namespace

template <Scalar T>
Matrix<T> moore_penrose(const Matrix<T>& a, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if constexpr (is_exact_v<T>) {
    const FullRankFactors<T> f = full_rank_factorization(a, tol);
    if (f.rank == 0) return Matrix<T>(a.cols(), a.rows());
    const Matrix<T> ps = f.left.conj_transpose();
    const Matrix<T> qs = f.right.conj_transpose();
    return qs * invert_or_throw(f.right * qs, tol, "moore_penrose") * invert_or_throw(ps * f.left, tol, "moore_penrose") *
           ps;
  } else {
    return detail::float_pseudoinverse(a, tol);
  }
}

template <Scalar T>
Matrix<T> drazin_cline(const Matrix<T>& a, const Tolerance& tol) {
  require_square(a, "drazin_cline");
  std::vector<Matrix<T>> bs;
  std::vector<Matrix<T>> cs;
  Matrix<T> m = a;
  while (true) {
    FullRankFactors<T> f = full_rank_factorization(m, tol);
    if (f.rank == 0) return Matrix<T>(a.rows(), a.cols());
    Matrix<T> cb = f.right * f.left;
    bs.push_back(std::move(f.left));
    cs.push_back(std::move(f.right));
    if (auto inv = inverse(cb, tol)) {
      Matrix<T> out = bs.front();
      for (std::size_t i = 1; i < bs.size(); ++i) out = out * bs[i];
      out = out * matrix_power(*inv, bs.size() + 1);
      for (std::size_t i = cs.size(); i-- > 0;) out = out * cs[i];
      return out;
    }
    m = std::move(cb);
  }
}

template <Scalar T>
Matrix<T> drazin(const Matrix<T>& a, const Tolerance& tol) {
  require_square(a, "drazin");
  const std::size_t l = index(a, tol);
  const Matrix<T> al = matrix_power(a, l);
  Matrix<T> x = al * moore_penrose(matrix_power(a, 2 * l + 1), tol) * al;
  if constexpr (is_exact_v<T>) {
    if (!(x == drazin_cline(a, tol))) {
      throw InvariantViolation("drazin: pseudoinverse route and Cline route disagree");
    }
  }
  return x;
}

template <Scalar T>
std::optional<Matrix<T>> group_inverse(const Matrix<T>& a, const Tolerance& tol) {
  require_square(a, "group_inverse");
  if (index(a, tol) > 1) return std::nullopt;
  return drazin(a, tol);
}

template <Scalar T>
std::optional<Matrix<T>> one_three_E(const Matrix<T>& a, const Weight<T>& e, const Tolerance& tol) {
  if (e.size() != a.rows()) {
    throw DimensionError("one_three_E: E must be " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()));
  }
  const Matrix<T> as = a.conj_transpose();
  auto z = solve_right(as * e.matrix() * a, a, tol);
  if (!z) return std::nullopt;
  return z->conj_transpose() * e.matrix();
}

template <Scalar T>
std::optional<Matrix<T>> one_four_F(const Matrix<T>& a, const Weight<T>& f, const Tolerance& tol) {
  if (f.size() != a.cols()) {
    throw DimensionError("one_four_F: F must be " + std::to_string(a.cols()) + "x" + std::to_string(a.cols()));
  }
  auto x = solve_left(a * f.inverse() * a.conj_transpose(), a, tol);
  if (!x) return std::nullopt;
  Matrix<T> y = f.inverse() * x->conj_transpose();
  const Axiom bundle[] = {AxiomTag::P1, AxiomTag::P4F};
  if (!check_axioms(a, y, bundle, nullptr, &f, tol).all_passed()) {
    throw InvariantViolation("one_four_F: candidate failed its {1,4^F} certificate");
  }
  return y;
}

namespace {

template <Scalar T>
std::optional<Matrix<T>> weighted_mp_systems(const Matrix<T>& a, const Weight<T>& e, const Weight<T>& f,
                                             const Tolerance& tol) {
  const Matrix<T>& em = e.matrix();
  const Matrix<T>& fi = f.inverse();
  const Matrix<T> core = a * fi * a.conj_transpose() * em * a;  // A F^{-1} A^* E A
  auto y = solve_left(core, a, tol);
  if (!y) return std::nullopt;
  auto z = solve_right(core, a, tol);
  if (!z) return std::nullopt;
  const Matrix<T> left = fi * (em * a * *y).conj_transpose();   // in A{1,4^F}
  const Matrix<T> right = fi * (em * *z * a).conj_transpose();  // in A{1,3^E}
  return left * a * right;
}

FloatMatrix weighted_mp_cholesky(const FloatMatrix& a, const Weight<Complex>& e, const Weight<Complex>& f,
                                 const Tolerance& tol) {
  auto r = cholesky_upper(e.matrix());
  auto s = cholesky_upper(f.matrix());
  if (!r || !s) throw PreconditionError("weighted_mp: Cholesky route needs positive definite weights");
  auto s_inv = detail::float_inverse(*s, tol);
  if (!s_inv) throw InvariantViolation("weighted_mp: singular Cholesky factor");
  return *s_inv * detail::float_pseudoinverse(*r * a * *s_inv, tol) * *r;
}

}  // namespace

template <Scalar T>
std::optional<Matrix<T>> weighted_mp(const Matrix<T>& a, const Weight<T>& e, const Weight<T>& f,
                                     const Tolerance& tol, WeightedMpRoute route) {
  if (e.size() != a.rows() || f.size() != a.cols()) {
    throw DimensionError("weighted_mp: weights must be " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()) +
                         " and " + std::to_string(a.cols()) + "x" + std::to_string(a.cols()));
  }
  std::optional<Matrix<T>> x;
  bool use_cholesky = false;
  if constexpr (!is_exact_v<T>) {
    use_cholesky = route == WeightedMpRoute::cholesky ||
                   (route == WeightedMpRoute::automatic && e.positive_definite() && f.positive_definite());
  } else if (route == WeightedMpRoute::cholesky) {
    throw PreconditionError("weighted_mp: the Cholesky route is not available on the exact backend");
  }
  if constexpr (!is_exact_v<T>) {
    if (use_cholesky) x = weighted_mp_cholesky(a, e, f, tol);
  }
  if (!use_cholesky) x = weighted_mp_systems(a, e, f, tol);
  if (!x) return std::nullopt;
  const Axiom bundle[] = {AxiomTag::P1, AxiomTag::P2, AxiomTag::P3E, AxiomTag::P4F};
  if (!check_axioms(a, *x, bundle, &e, &f, tol).all_passed()) {
    throw InvariantViolation("weighted_mp: result failed its certificate");
  }
  return x;
}

#define WCEP_INSTANTIATE(T)                                                                               \
  template Matrix<T> moore_penrose(const Matrix<T>&, const Tolerance&);                                 \
  template Matrix<T> drazin(const Matrix<T>&, const Tolerance&);                                        \
  template Matrix<T> drazin_cline(const Matrix<T>&, const Tolerance&);                                  \
  template std::optional<Matrix<T>> group_inverse(const Matrix<T>&, const Tolerance&);                  \
  template std::optional<Matrix<T>> one_three_E(const Matrix<T>&, const Weight<T>&, const Tolerance&);  \
  template std::optional<Matrix<T>> one_four_F(const Matrix<T>&, const Weight<T>&, const Tolerance&);   \
  template std::optional<Matrix<T>> weighted_mp(const Matrix<T>&, const Weight<T>&, const Weight<T>&,   \
                                                const Tolerance&, WeightedMpRoute);

WCEP_INSTANTIATE(GaussianRational)
WCEP_INSTANTIATE(Complex)

#undef WCEP_INSTANTIATE

}  // namespace wcep
