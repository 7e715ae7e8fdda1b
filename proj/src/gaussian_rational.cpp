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

#include "wcep/gaussian_rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wcep/errors.hpp"

namespace wcep {

namespace {

bool is_rational_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

mpq_class parse_rational(std::string_view s, std::string_view whole) {
  if (!is_rational_literal(s)) {
    throw ParseError("malformed rational '" + std::string(s) + "' in '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  mpq_class q;
  q.set_str(std::string(s), 10);
  if (sgn(q.get_den()) == 0) {
    throw ParseError("zero denominator in '" + std::string(whole) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::from_parts(mpq_class re, mpq_class im) {
  GaussianRational z;
  z.re_ = std::move(re);
  z.im_ = std::move(im);
  z.re_.canonicalize();
  z.im_.canonicalize();
  return z;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussianRational(parse_rational(s, text));

  std::string_view body(s.data(), s.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  mpq_class re{0};
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = parse_rational(body.substr(0, split), text);
    im_text = body.substr(split);
  }
  mpq_class im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = parse_rational(im_text, text);
  }
  return from_parts(std::move(re), std::move(im));
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + " i";
  std::string out = re_.get_str();
  out += sgn(im_) > 0 ? "+" : "-";
  out += mpq_class(abs(im_)).get_str();
  out += " i";
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const mpq_class d = rhs.norm();
  mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
  mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return GaussianRational(std::move(q));
}

}  // namespace wcep
