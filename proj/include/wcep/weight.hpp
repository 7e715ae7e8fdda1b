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

#include "wcep/linalg.hpp"

namespace wcep {

/**
 * A validated Hermitian invertible weight (the E or F of the weighted
 * axioms). Construction fails with InvalidWeight otherwise. The inverse and
 * the positive-definiteness flag are computed once.
 */
template <Scalar T>
class Weight {
 public:
  static Weight make(Matrix<T> m, const Tolerance& tol = Tolerance::for_backend<T>());
  static Weight identity(std::size_t n);

  const Matrix<T>& matrix() const { return m_; }
  const Matrix<T>& inverse() const { return inv_; }
  bool positive_definite() const { return pd_; }
  std::size_t size() const { return m_.rows(); }

 private:
  Weight(Matrix<T> m, Matrix<T> inv, bool pd) : m_(std::move(m)), inv_(std::move(inv)), pd_(pd) {}

  Matrix<T> m_;
  Matrix<T> inv_;
  bool pd_ = false;
};

/// Exact Sylvester test via Hermitian elimination without pivoting; LLT on float.
template <Scalar T>
bool is_positive_definite(const Matrix<T>& hermitian);

}  // namespace wcep
