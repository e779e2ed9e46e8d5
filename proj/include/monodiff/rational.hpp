// Copyright 2026 the monodiff authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>

#include "monodiff/errors.hpp"

namespace monodiff {

using Integer = mpz_class;

// Exact rational number. Always canonical: reduced, denominator > 0, and the
// zero value is 0/1. gmpxx does the arithmetic; this wrapper exists because
// raw mpq_class construction does not canonicalize.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const Integer& n) : v_(n) {}      // NOLINT
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    v_.canonicalize();
  }

  // Parses "p" or "p/q" (optional leading '-'). Throws ZeroDenominator for
  // q = 0 and Error for malformed text.
  static Rational from_string(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0) {
      throw Error("malformed rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(r.v_.get_mpq_t())) == 0) {
      throw ZeroDenominator("rational with zero denominator: '" + s + "'");
    }
    r.v_.canonicalize();
    return r;
  }

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  explicit Rational(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

}  // namespace monodiff
