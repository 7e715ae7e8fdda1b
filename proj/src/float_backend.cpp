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

// Eigen-backed kernels for the floating backend: SVD, pseudoinverse, LU, LLT.

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>

#include "float_backend.hpp"

namespace wcep::detail {

namespace {

Eigen::MatrixXcd to_eigen(const FloatMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

FloatMatrix from_eigen(const Eigen::MatrixXcd& m) {
  FloatMatrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

struct Svd {
  Eigen::MatrixXcd u;
  Eigen::VectorXd sigma;
  Eigen::MatrixXcd v;
  std::size_t rank = 0;
};

Svd thin_svd(const FloatMatrix& a, const Tolerance& tol) {
  Svd out;
  if (a.rows() == 0 || a.cols() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.u = svd.matrixU();
  out.sigma = svd.singularValues();
  out.v = svd.matrixV();
  const double smax = out.sigma.size() ? out.sigma(0) : 0.0;
  const double cutoff = tol.rank_rel * smax * static_cast<double>(std::max(a.rows(), a.cols()));
  for (Eigen::Index i = 0; i < out.sigma.size(); ++i) {
    if (out.sigma(i) > cutoff && out.sigma(i) > 0.0) ++out.rank;
  }
  return out;
}

}  // namespace

std::vector<double> float_singular_values(const FloatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

std::size_t float_rank(const FloatMatrix& a, const Tolerance& tol) { return thin_svd(a, tol).rank; }

FloatMatrix float_pseudoinverse(const FloatMatrix& a, const Tolerance& tol) {
  const Svd s = thin_svd(a, tol);
  if (s.rank == 0) return FloatMatrix(a.cols(), a.rows());
  const auto r = static_cast<Eigen::Index>(s.rank);
  Eigen::MatrixXcd vr = s.v.leftCols(r);
  for (Eigen::Index i = 0; i < r; ++i) vr.col(i) /= s.sigma(i);
  return from_eigen(vr * s.u.leftCols(r).adjoint());
}

FullRankFactors<Complex> float_full_rank(const FloatMatrix& a, const Tolerance& tol) {
  const Svd s = thin_svd(a, tol);
  FullRankFactors<Complex> f;
  f.rank = s.rank;
  if (s.rank == 0) {
    f.left = FloatMatrix(a.rows(), 0);
    f.right = FloatMatrix(0, a.cols());
    return f;
  }
  const auto r = static_cast<Eigen::Index>(s.rank);
  Eigen::MatrixXcd left = s.u.leftCols(r);
  for (Eigen::Index i = 0; i < r; ++i) left.col(i) *= s.sigma(i);
  f.left = from_eigen(left);
  f.right = from_eigen(s.v.leftCols(r).adjoint());
  return f;
}

std::optional<FloatMatrix> float_inverse(const FloatMatrix& a, const Tolerance& tol) {
  if (a.rows() == 0) return FloatMatrix();
  if (float_rank(a, tol) < a.rows()) return std::nullopt;
  return from_eigen(to_eigen(a).partialPivLu().inverse());
}

std::optional<FloatMatrix> float_cholesky_upper(const FloatMatrix& e) {
  Eigen::LLT<Eigen::MatrixXcd> llt(to_eigen(e));
  if (llt.info() != Eigen::Success) return std::nullopt;
  Eigen::MatrixXcd upper = llt.matrixU();
  return from_eigen(upper);
}

}  // namespace wcep::detail
