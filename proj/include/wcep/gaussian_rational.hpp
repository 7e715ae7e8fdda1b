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

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace wcep {

/**
 * Complex number whose real and imaginary parts are arbitrary-precision
 * rationals. Both parts are always kept in canonical form (reduced, positive
 * denominator), so equality is structural.
 *
 * Text form: "p", "p/q", "p/q i", "p/q+r/s i", "p/q-r/s i". The parser is
 * lenient about whitespace and accepts a bare "i"/"-i"; to_string() always
 * emits the canonical spelling.
 */
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }

  static GaussianRational from_parts(mpq_class re, mpq_class im);

  /// Throws ParseError on malformed text or a zero denominator.
  static GaussianRational parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return from_parts(re_, -im_); }

  /// Squared modulus, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational operator-() const { return from_parts(-re_, -im_); }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Shorthand for the real rational num/den.
GaussianRational ratio(long num, long den);

}  // namespace wcep
