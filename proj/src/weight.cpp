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

#include "wcep/weight.hpp"

namespace wcep {

template <Scalar T>
bool is_positive_definite(const Matrix<T>& h) {
  if constexpr (is_exact_v<T>) {
    ExactMatrix m = h;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
      const GaussianRational& d = m(k, k);
      if (!d.is_real() || sgn(d.real()) <= 0) return false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        const GaussianRational factor = m(i, k) / d;
        for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      }
    }
    return true;
  } else {
    return cholesky_upper(h).has_value();
  }
}

template <Scalar T>
Weight<T> Weight<T>::make(Matrix<T> m, const Tolerance& tol) {
  check_tolerance<T>(tol);
  if (!m.is_square()) throw InvalidWeight("weight must be square, got " + m.shape());
  const Matrix<T> star = m.conj_transpose();
  bool hermitian = false;
  if constexpr (is_exact_v<T>) {
    hermitian = (m == star);
  } else {
    hermitian = (m - star).frobenius_norm() <= tol.residual_rel * std::max(1.0, m.frobenius_norm());
  }
  if (!hermitian) throw InvalidWeight("weight is not Hermitian");
  if constexpr (!is_exact_v<T>) {
    m = (m + star) * Complex(0.5);
  }
  auto inv = wcep::inverse(m, tol);
  if (!inv) throw InvalidWeight("weight is singular");
  const bool pd = is_positive_definite(m);
  return Weight(std::move(m), *std::move(inv), pd);
}

template <Scalar T>
Weight<T> Weight<T>::identity(std::size_t n) {
  return Weight(Matrix<T>::identity(n), Matrix<T>::identity(n), true);
}

template class Weight<GaussianRational>;
template class Weight<Complex>;
template bool is_positive_definite(const Matrix<GaussianRational>&);
template bool is_positive_definite(const Matrix<Complex>&);

}  // namespace wcep
