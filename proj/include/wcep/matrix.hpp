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

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcep/errors.hpp"
#include "wcep/gaussian_rational.hpp"

namespace wcep {

enum class Backend { exact, floating };

inline const char* to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

using Complex = std::complex<double>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr Backend backend = Backend::exact;
  static GaussianRational conj(const GaussianRational& z) { return z.conj(); }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static double abs2(const GaussianRational& z) { return std::norm(z.to_complex()); }
  static Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Backend backend = Backend::floating;
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z) { return z == Complex{}; }
  static double abs2(const Complex& z) { return std::norm(z); }
  static Complex to_complex(const Complex& z) { return z; }
};

/// Either backend's scalar: exact Gaussian rationals or complex doubles.
template <class T>
concept Scalar = requires { ScalarTraits<T>::backend; };

template <Scalar T>
constexpr bool is_exact_v = ScalarTraits<T>::backend == Backend::exact;

/**
 * Dense row-major matrix over one backend's scalar type. The scalar type is
 * the backend tag, so mixing backends is a compile-time error.
 *
 * Zero-sized dimensions are permitted; they arise as the factors of a
 * rank-zero full-rank factorization.
 */
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("Matrix: entry count does not match rows x cols");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!ScalarTraits<T>::is_zero(x)) return false;
    }
    return true;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += ScalarTraits<T>::abs2(x);
    return std::sqrt(s);
  }

  Matrix conj_transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = ScalarTraits<T>::conj((*this)(i, j));
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix out(*this);
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("Matrix product: " + a.shape() + " times " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ScalarTraits<T>::is_zero(ail)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += ail * b(l, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw DimensionError(std::string("Matrix ") + op + ": " + shape() + " vs " + rhs.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<Complex>;

template <Scalar T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  return a.conj_transpose();
}

/// [M | N]
template <Scalar T>
Matrix<T> hstack(const Matrix<T>& m, const Matrix<T>& n) {
  if (m.rows() != n.rows()) throw DimensionError("hstack: row counts differ");
  Matrix<T> out(m.rows(), m.cols() + n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    for (std::size_t j = 0; j < n.cols(); ++j) out(i, m.cols() + j) = n(i, j);
  }
  return out;
}

/// [M ; N]
template <Scalar T>
Matrix<T> vstack(const Matrix<T>& m, const Matrix<T>& n) {
  if (m.cols() != n.cols()) throw DimensionError("vstack: column counts differ");
  Matrix<T> out(m.rows() + n.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) out(m.rows() + i, j) = n(i, j);
  return out;
}

/// diag(M, N)
template <Scalar T>
Matrix<T> block_diag(const Matrix<T>& m, const Matrix<T>& n) {
  Matrix<T> out(m.rows() + n.rows(), m.cols() + n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) out(m.rows() + i, m.cols() + j) = n(i, j);
  return out;
}

/// Lossless in one direction only: exact -> float.
inline FloatMatrix to_float(const ExactMatrix& m) {
  std::vector<Complex> data;
  data.reserve(m.data().size());
  for (const auto& z : m.data()) data.push_back(z.to_complex());
  return FloatMatrix(m.rows(), m.cols(), std::move(data));
}

inline FloatMatrix to_float(const FloatMatrix& m) { return m; }

}  // namespace wcep
