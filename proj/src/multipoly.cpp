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

#include "monodiff/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "monodiff/errors.hpp"

namespace monodiff {

namespace {

int exp_total(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  int da = exp_total(a), db = exp_total(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_total(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw DimensionMismatch("exponent arity " + std::to_string(e.size()) +
                            " != " + std::to_string(nvars_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly f(nvars_);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) {
    throw DimensionMismatch("adding polynomials of different arity");
  }
  MultiPoly f = a;
  for (const auto& [e, c] : b.terms_) f.add_term(e, c);
  return f;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) {
    throw DimensionMismatch("multiplying polynomials of different arity");
  }
  MultiPoly f(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      f.add_term(e, ca * cb);
    }
  }
  return f;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly f(nvars_);
  if (c.is_zero()) return f;
  for (const auto& [e, a] : terms_) f.terms_.emplace(e, a * c);
  return f;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw DimensionMismatch("evaluation point arity mismatch");
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) -> std::string {
    if (i < static_cast<int>(names.size())) return names[static_cast<std::size_t>(i)];
    static const char* xyz[] = {"x", "y", "z"};
    if (nvars_ <= 3) return xyz[i];
    return "x" + std::to_string(i + 1);
  };
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool first = out.empty();
    if (!first) out += (c.sign() < 0) ? " - " : " + ";
    if (first && c.sign() < 0) out += "-";
    Rational mag = (c.sign() < 0) ? -c : c;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly compose_affine(const UniPoly& f, const AffineForm& image, int nvars) {
  // Linear form as a polynomial, then Horner.
  MultiPoly lin(nvars);
  for (const auto& [var, coef] : image.terms) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    lin.add_term(e, Rational(coef));
  }
  lin.add_term(Exponents(static_cast<std::size_t>(nvars), 0),
               Rational(image.constant));
  MultiPoly acc(nvars);
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * lin;
    acc.add_term(Exponents(static_cast<std::size_t>(nvars), 0), f.coeff(k));
  }
  return acc;
}

MultiPoly substitute_affine(const MultiPoly& f,
                            const std::vector<AffineForm>& images,
                            int new_nvars) {
  if (static_cast<int>(images.size()) != f.nvars()) {
    throw DimensionMismatch("substitution image count != arity");
  }
  // Image linear forms as polynomials.
  std::vector<MultiPoly> lins;
  lins.reserve(images.size());
  for (const auto& img : images) {
    MultiPoly lin(new_nvars);
    for (const auto& [var, coef] : img.terms) {
      Exponents e(static_cast<std::size_t>(new_nvars), 0);
      e[static_cast<std::size_t>(var)] = 1;
      lin.add_term(e, Rational(coef));
    }
    lin.add_term(Exponents(static_cast<std::size_t>(new_nvars), 0),
                 Rational(img.constant));
    lins.push_back(lin);
  }
  // Cached powers lins[i]^k, filled on demand.
  std::vector<std::vector<MultiPoly>> powers(lins.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      MultiPoly one(new_nvars);
      one.add_term(Exponents(static_cast<std::size_t>(new_nvars), 0),
                   Rational(1));
      cache.push_back(one);
    }
    while (static_cast<int>(cache.size()) <= k) {
      cache.push_back(cache.back() * lins[i]);
    }
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly out(new_nvars);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term(new_nvars);
    term.add_term(Exponents(static_cast<std::size_t>(new_nvars), 0), c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    out = out + term;
  }
  return out;
}

MultiPoly embed(const UniPoly& f, int nvars, int var) {
  return compose_affine(f, AffineForm{{{var, 1}}, 0}, nvars);
}

MultiPoly substitute_sum(const UniPoly& f, int nvars) {
  AffineForm sum;
  for (int i = 0; i < nvars; ++i) sum.terms.emplace_back(i, 1);
  return compose_affine(f, sum, nvars);
}

MultiPoly partial_eval(const MultiPoly& f, int var, const Rational& value) {
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Rational coef = c;
    for (int k = 0; k < e[static_cast<std::size_t>(var)]; ++k) coef *= value;
    Exponents e2 = e;
    e2[static_cast<std::size_t>(var)] = 0;
    out.add_term(e2, coef);
  }
  return out;
}

UniPoly to_unipoly(const MultiPoly& f, int var) {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != var && e[i] != 0) {
        throw DimensionMismatch("polynomial is not univariate in the "
                                "requested variable");
      }
    }
    int k = e[static_cast<std::size_t>(var)];
    if (static_cast<int>(coeffs.size()) <= k) {
      coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    }
    coeffs[static_cast<std::size_t>(k)] = c;
  }
  return UniPoly::from_coeffs(std::move(coeffs));
}

}  // namespace monodiff
