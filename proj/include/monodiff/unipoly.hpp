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

#include <string>
#include <utility>
#include <vector>

#include "monodiff/rational.hpp"

namespace monodiff {

// Dense univariate polynomial with exact rational coefficients.
// Invariant: no trailing zero coefficients; the zero polynomial stores no
// coefficients and reports degree() == -1, which compares smaller than every
// other degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rational& constant);

  // Coefficients in ascending degree; trailing zeros are trimmed.
  static UniPoly from_coeffs(std::vector<Rational> coeffs);
  // c * x^k (k >= 0).
  static UniPoly monomial(int k, const Rational& c = Rational(1));
  // Monic product of (x - r) over the given roots; empty list gives 1.
  static UniPoly from_roots(const std::vector<int>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
  Rational lc() const;
  // Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& c) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  // Expanded canonical text, terms in descending degree, e.g. "x^2 - 3*x".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// f(x + e).
UniPoly shift(const UniPoly& f, int e);

// Quotient and remainder of a by b (b nonzero), deg r < deg b.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// a / b, throwing DivisionNotExact when the remainder is nonzero.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

}  // namespace monodiff
