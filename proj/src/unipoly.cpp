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

#include "monodiff/unipoly.hpp"

#include <algorithm>

#include "monodiff/errors.hpp"

namespace monodiff {

UniPoly::UniPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> coeffs) {
  UniPoly f;
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

UniPoly UniPoly::monomial(int k, const Rational& c) {
  if (c.is_zero()) return UniPoly();
  UniPoly f;
  f.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
  f.coeffs_.back() = c;
  return f;
}

UniPoly UniPoly::from_roots(const std::vector<int>& roots) {
  UniPoly f(Rational(1));
  for (int r : roots) {
    f = f * from_coeffs({Rational(-r), Rational(1)});
  }
  return f;
}

Rational UniPoly::lc() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly f;
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) f.coeffs_.push_back(-c);
  return f;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  UniPoly f;
  f.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) f.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) f.coeffs_[i] += b.coeffs_[i];
  f.trim();
  return f;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly f;
  f.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      f.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  f.trim();
  return f;
}

UniPoly UniPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return UniPoly();
  UniPoly f;
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) f.coeffs_.push_back(a * c);
  return f;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

namespace {

// "x", "x^3", or "" for the constant term.
std::string power_str(int k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

}  // namespace

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (!first) out += (c.sign() < 0) ? " - " : " + ";
    if (first && c.sign() < 0) out += "-";
    Rational mag = (c.sign() < 0) ? -c : c;
    std::string pw = power_str(k);
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

UniPoly shift(const UniPoly& f, int e) {
  // Horner in (x + e): f(x + e) = (...(a_n (x+e) + a_{n-1})(x+e) + ...).
  UniPoly xe = UniPoly::from_coeffs({Rational(e), Rational(1)});
  UniPoly acc;
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * xe + UniPoly(f.coeff(k));
  }
  return acc;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionNotExact("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Rational lb = b.lc();
  std::vector<Rational> quo;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= db) {
    while (dr >= 0 && rem[static_cast<std::size_t>(dr)].is_zero()) --dr;
    if (dr < db) break;
    Rational q = rem[static_cast<std::size_t>(dr)] / lb;
    int shift_by = dr - db;
    if (static_cast<int>(quo.size()) < shift_by + 1) {
      quo.resize(static_cast<std::size_t>(shift_by) + 1, Rational(0));
    }
    quo[static_cast<std::size_t>(shift_by)] = q;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(shift_by + i)] -= q * b.coeff(i);
    }
    --dr;
  }
  return {UniPoly::from_coeffs(std::move(quo)),
          UniPoly::from_coeffs(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) {
    throw DivisionNotExact("(" + a.str() + ") is not divisible by (" +
                           b.str() + ")");
  }
  return q;
}

}  // namespace monodiff
