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

#include <map>
#include <string>
#include <vector>

#include "monodiff/rational.hpp"

namespace monodiff {

// Laurent polynomial in one variable t with rational coefficients.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int n, const Rational& c = Rational(1)) {
    LaurentPoly f;
    if (!c.is_zero()) f.terms_[n] = c;
    return f;
  }

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& terms() const { return terms_; }

  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(terms_.size());
    for (const auto& [n, c] : terms_) s.push_back(n);
    return s;
  }

  void add_term(int n, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly f;
    for (const auto& [n, c] : terms_) f.terms_.emplace(n, -c);
    return f;
  }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f = a;
    for (const auto& [n, c] : b.terms_) f.add_term(n, c);
    return f;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f;
    for (const auto& [na, ca] : a.terms_) {
      for (const auto& [nb, cb] : b.terms_) f.add_term(na + nb, ca * cb);
    }
    return f;
  }
  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly f;
    if (c.is_zero()) return f;
    for (const auto& [n, a] : terms_) f.terms_.emplace(n, a * c);
    return f;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Canonical text, ascending exponents, e.g. "4*t^2", "t^-1 + 1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [n, c] : terms_) {
      const bool first = out.empty();
      if (!first) out += (c.sign() < 0) ? " - " : " + ";
      if (first && c.sign() < 0) out += "-";
      Rational mag = (c.sign() < 0) ? -c : c;
      std::string pw;
      if (n == 1) {
        pw = "t";
      } else if (n != 0) {
        pw = "t^" + std::to_string(n);
      }
      if (pw.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += pw;
      } else {
        out += mag.str() + "*" + pw;
      }
    }
    return out;
  }

 private:
  std::map<int, Rational> terms_;
};

}  // namespace monodiff
