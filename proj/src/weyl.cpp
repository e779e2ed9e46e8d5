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

#include "monodiff/weyl.hpp"

#include <algorithm>

#include "monodiff/errors.hpp"

namespace monodiff {

WeylElement WeylElement::from_term(const UniPoly& f, int d) {
  WeylElement e;
  if (!f.is_zero()) e.terms_.emplace(d, f);
  return e;
}

WeylElement WeylElement::euler() {
  return from_term(UniPoly::monomial(1), 0);
}

WeylElement WeylElement::partial() {
  return from_term(UniPoly::monomial(1), -1);
}

WeylElement WeylElement::from_classical(int i, int j) {
  if (j < 0) throw BadIndex("negative derivative power " + std::to_string(j));
  std::vector<int> roots;
  roots.reserve(static_cast<std::size_t>(j));
  for (int k = 0; k < j; ++k) roots.push_back(k);
  return from_term(UniPoly::from_roots(roots), i - j);
}

UniPoly WeylElement::component(int d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? UniPoly() : it->second;
}

std::vector<int> WeylElement::support() const {
  std::vector<int> out;
  out.reserve(terms_.size());
  for (const auto& [d, f] : terms_) out.push_back(d);
  return out;
}

int WeylElement::order() const {
  int n = -1;
  for (const auto& [d, f] : terms_) n = std::max(n, f.degree());
  return n;
}

WeylElement WeylElement::operator-() const {
  WeylElement e;
  for (const auto& [d, f] : terms_) e.terms_.emplace(d, -f);
  return e;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  WeylElement e = a;
  for (const auto& [d, f] : b.terms_) {
    auto [it, inserted] = e.terms_.emplace(d, f);
    if (!inserted) {
      it->second = it->second + f;
      if (it->second.is_zero()) e.terms_.erase(it);
    }
  }
  return e;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  return a + (-b);
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement e;
  for (const auto& [d, f] : a.terms_) {
    for (const auto& [g_deg, g] : b.terms_) {
      UniPoly prod = shift(f, g_deg) * g;
      if (prod.is_zero()) continue;
      auto [it, inserted] = e.terms_.emplace(d + g_deg, prod);
      if (!inserted) {
        it->second = it->second + prod;
        if (it->second.is_zero()) e.terms_.erase(it);
      }
    }
  }
  return e;
}

WeylElement WeylElement::scaled(const Rational& c) const {
  WeylElement e;
  if (c.is_zero()) return e;
  for (const auto& [d, f] : terms_) e.terms_.emplace(d, f.scaled(c));
  return e;
}

LaurentPoly WeylElement::apply(const LaurentPoly& v) const {
  LaurentPoly out;
  for (const auto& [a, c] : v.terms()) {
    for (const auto& [d, f] : terms_) {
      out.add_term(a + d, c * f.evaluate(Rational(a)));
    }
  }
  return out;
}

WeylElement pow(const WeylElement& d, int n) {
  if (n < 0) throw BadIndex("negative operator power " + std::to_string(n));
  WeylElement acc = WeylElement::one();
  for (int k = 0; k < n; ++k) acc = acc * d;
  return acc;
}

UniPoly ell(int d, const SemigroupPair& pair) {
  return UniPoly::from_roots(z_set(d, pair.source, pair.target).values());
}

WeylElement generator_L(int d, const SemigroupPair& pair) {
  return WeylElement::from_term(ell(d, pair), d);
}

bool is_member(const WeylElement& d, const SemigroupPair& pair) {
  for (const auto& [deg, f] : d.terms()) {
    if (!divrem(f, ell(deg, pair)).second.is_zero()) return false;
  }
  return true;
}

bool is_member_pointwise(const WeylElement& d, const SemigroupPair& pair) {
  if (d.is_zero()) return true;
  // t^b can map outside the target span only while b + min-shift stays at or
  // below the target's Frobenius number.
  const int min_shift = d.terms().begin()->first;
  const int hi = std::max(0, pair.target.frobenius() - min_shift);
  for (int b = 0; b <= hi; ++b) {
    if (!pair.source.contains(b)) continue;
    LaurentPoly image = d.apply(LaurentPoly::monomial(b));
    for (const auto& [n, c] : image.terms()) {
      if (!pair.target.contains(n)) return false;
    }
  }
  return true;
}

IntegerFactorization factor_integer_roots(const UniPoly& f) {
  IntegerFactorization out;
  if (f.is_zero()) return out;
  out.lead = f.lc();
  if (f.degree() == 0) {
    out.splits = true;
    return out;
  }
  // Cauchy bound: all roots have magnitude < 1 + max |a_i / a_n|.
  Rational bound(1);
  for (int k = 0; k < f.degree(); ++k) {
    Rational mag = f.coeff(k) / f.lc();
    if (mag.sign() < 0) mag = -mag;
    if (mag > bound) bound = mag;
  }
  Integer limit_z = bound.num() / bound.den() + 2;
  if (limit_z > 10000) return out;  // give up factoring, print expanded
  int limit = static_cast<int>(limit_z.get_si());
  UniPoly g = f.scaled(Rational(1) / f.lc());
  for (int r = -limit; r <= limit && g.degree() > 0; ++r) {
    UniPoly lin = UniPoly::from_coeffs({Rational(-r), Rational(1)});
    while (g.degree() > 0 && g.evaluate(Rational(r)).is_zero()) {
      g = exact_divide(g, lin);
      out.roots.push_back(r);
    }
  }
  out.splits = (g.degree() == 0);
  if (!out.splits) out.roots.clear();
  return out;
}

std::string t_power_text(int d) {
  if (d == 0) return "1";
  if (d == 1) return "t";
  return "t^" + std::to_string(d);
}

namespace {

// Positive-leading-coefficient polynomial as a product of integer-root
// factors when possible, else parenthesized expanded text.
std::string poly_term_str(const UniPoly& f) {
  IntegerFactorization fac = factor_integer_roots(f);
  if (!fac.splits) {
    if (f.degree() >= 1) return "(" + f.str() + ")";
    return f.str();
  }
  std::string out;
  if (!fac.lead.is_one() || fac.roots.empty()) out = fac.lead.str();
  std::size_t i = 0;
  while (i < fac.roots.size()) {
    std::size_t j = i;
    while (j < fac.roots.size() && fac.roots[j] == fac.roots[i]) ++j;
    std::string factor;
    int r = fac.roots[i];
    if (r == 0) {
      factor = "x";
    } else if (r > 0) {
      factor = "(x-" + std::to_string(r) + ")";
    } else {
      factor = "(x+" + std::to_string(-r) + ")";
    }
    if (j - i > 1) factor += "^" + std::to_string(j - i);
    if (!out.empty()) out += "*";
    out += factor;
    i = j;
  }
  return out;
}

}  // namespace

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, f] : terms_) {
    const bool neg = f.lc().sign() < 0;
    const bool first = out.empty();
    if (!first) out += neg ? " - " : " + ";
    if (first && neg) out += "-";
    out += poly_term_str(neg ? -f : f) + " # " + t_power_text(d);
  }
  return out;
}

RelationsReport relations_cusp_check() {
  SemigroupPair cusp = SemigroupPair::diagonal(NumericalSemigroup({2, 3}));
  const WeylElement d0 = WeylElement::euler();
  const WeylElement one = WeylElement::one();
  const WeylElement lm2 = generator_L(-2, cusp);
  const WeylElement lm3 = generator_L(-3, cusp);
  const WeylElement lm4 = generator_L(-4, cusp);
  const WeylElement l1 = generator_L(1, cusp);
  const WeylElement lm1 = generator_L(-1, cusp);
  auto t = [](int k) { return WeylElement::t_power(k); };

  RelationsReport report;
  report.identities.push_back(
      {"D0 = t^2*(D0-1)*L(-2) - t^3*L(-3)",
       d0 == t(2) * (d0 - one) * lm2 - t(3) * lm3});
  report.identities.push_back(
      {"D0 = t^3*(D0-1)*L(-3) - t^4*L(-4) - t^2*L(-2)",
       d0 == t(3) * (d0 - one) * lm3 - t(4) * lm4 - t(2) * lm2});
  report.identities.push_back(
      {"L(1) = t^3*(D0-1)*L(-2) - t^4*L(-3)",
       l1 == t(3) * (d0 - one) * lm2 - t(4) * lm3});
  report.identities.push_back(
      {"L(-1) = t^2*(D0-1)*L(-3) - t^3*L(-2)^2",
       lm1 == t(2) * (d0 - one) * lm3 - t(3) * lm2 * lm2});
  return report;
}

std::map<int, Rational> pointwise_expansion(int n,
                                            const NumericalSemigroup& a) {
  if (n <= a.frobenius() + 2) {
    throw BadIndex("expansion bound must exceed frobenius + 2");
  }
  SemigroupPair pair = SemigroupPair::diagonal(a);
  std::map<int, Rational> c;
  // ell(-k) for members k in [2, n], filled as needed.
  std::map<int, UniPoly> ells;
  for (int i = 1; i <= n; ++i) {
    if (!a.contains(i)) continue;
    Rational lhs_known(0);
    for (const auto& [k, ck] : c) {
      lhs_known += ck * ells.at(k).evaluate(Rational(i));
    }
    if (i < 2) {
      // No unknown is available for this row.
      if (lhs_known != Rational(i)) {
        throw NoSolution("no expansion: row " + std::to_string(i) +
                         " has no free coefficient");
      }
      continue;
    }
    UniPoly li = ell(-i, pair);
    Rational diag = li.evaluate(Rational(i));
    if (diag.is_zero()) {
      throw NoSolution("vanishing diagonal at member " + std::to_string(i));
    }
    c[i] = (Rational(i) - lhs_known) / diag;
    ells.emplace(i, std::move(li));
  }
  return c;
}

TauWitness tau_witness(int n) {
  if (n < 3) throw BadIndex("witness index must be at least 3");
  TauWitness w;
  MultiPoly s = embed(UniPoly::monomial(1), 2, 0);
  MultiPoly t = embed(UniPoly::monomial(1), 2, 1);
  MultiPoly diff = t - s;
  MultiPoly acc(2);
  acc.add_term({0, 0}, Rational(1));
  for (int k = 0; k < n; ++k) acc = acc * diff;
  MultiPoly quad = s * s + (s * t).scaled(Rational(n)) + t * t;
  w.poly = acc * quad;
  w.total_degree = w.poly.total_degree();
  NumericalSemigroup cusp({2, 3});
  w.exponents_in_semigroup = true;
  for (const auto& [e, coef] : w.poly.terms()) {
    if (!cusp.contains(e[0]) || !cusp.contains(e[1])) {
      w.exponents_in_semigroup = false;
    }
  }
  w.degree_below_product_floor = w.total_degree < 2 * n;
  return w;
}

}  // namespace monodiff
