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

#include "monodiff/laurent.hpp"
#include "monodiff/multipoly.hpp"
#include "monodiff/rational.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/unipoly.hpp"

namespace monodiff {

// Ordered pair of numerical semigroups (source, target): the ring of
// operators carrying the span of {t^b : b in source} into the span of
// {t^a : a in target}.
struct SemigroupPair {
  NumericalSemigroup source;
  NumericalSemigroup target;

  static SemigroupPair diagonal(const NumericalSemigroup& s) {
    return SemigroupPair{s, s};
  }
  std::string str() const {
    return "(" + source.str() + "," + target.str() + ")";
  }
  friend bool operator==(const SemigroupPair& a, const SemigroupPair& b) {
    return a.source == b.source && a.target == b.target;
  }
};

// Element of the crossed product k[x] # Z: a finite sum of terms f_d(x) t^d.
// Multiplication moves t past polynomial coefficients by shifting the
// argument: (f t^d)(g t^e) = f(x+e) g(x) t^(d+e). Acting on Laurent
// polynomials, (f t^d)(t^a) = f(a) t^(a+d).
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement zero() { return WeylElement(); }
  static WeylElement one() { return from_term(UniPoly(Rational(1)), 0); }
  // c * t^k.
  static WeylElement t_power(int k, const Rational& c = Rational(1)) {
    return from_term(UniPoly(c), k);
  }
  // Single term f(x) t^d.
  static WeylElement from_term(const UniPoly& f, int d);
  // x t^0, the Euler operator t d/dt.
  static WeylElement euler();
  // x t^(-1), the derivative d/dt.
  static WeylElement partial();
  // t^i (d/dt)^j = x(x-1)...(x-j+1) t^(i-j); j must be nonnegative.
  static WeylElement from_classical(int i, int j);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, UniPoly>& terms() const { return terms_; }
  // Coefficient polynomial of t^d (zero when absent).
  UniPoly component(int d) const;
  std::vector<int> support() const;
  // Max coefficient degree; -1 for the zero element.
  int order() const;

  WeylElement operator-() const;
  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement scaled(const Rational& c) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) {
    return !(a == b);
  }

  LaurentPoly apply(const LaurentPoly& v) const;

  // Canonical text: terms by ascending t-exponent, coefficient polynomials
  // factored over their integer roots when they split, e.g.
  // "x*(x-3) # t^-2".
  std::string str() const;

 private:
  std::map<int, UniPoly> terms_;
};

WeylElement pow(const WeylElement& d, int n);

// "1", "t", "t^-2": the canonical text for a power of t.
std::string t_power_text(int d);

// Monic vanishing polynomial of {i in source : i + d not in target}.
UniPoly ell(int d, const SemigroupPair& pair);

// ell(d) t^d, the canonical degree-d member.
WeylElement generator_L(int d, const SemigroupPair& pair);

// True when every coefficient f_d is divisible by ell(d).
bool is_member(const WeylElement& d, const SemigroupPair& pair);

// Oracle for is_member: applies the operator to every t^b needed to cover
// all possible escapes from the target span.
bool is_member_pointwise(const WeylElement& d, const SemigroupPair& pair);

// Factors a coefficient polynomial as lc * prod (x - r_i) over integer
// roots, ascending with multiplicity; empty result when it does not split.
struct IntegerFactorization {
  bool splits = false;
  Rational lead;
  std::vector<int> roots;
};
IntegerFactorization factor_integer_roots(const UniPoly& f);

// One named identity check.
struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct RelationsReport {
  std::vector<IdentityCheck> identities;
  bool all_ok() const {
    for (const auto& c : identities) {
      if (!c.holds) return false;
    }
    return true;
  }
};

// Verifies the four exact rewriting identities among the canonical
// generators over the pair (<2,3>, <2,3>).
RelationsReport relations_cusp_check();

// Coefficients c_a (a in A, 2 <= a <= N) with
// sum c_a ell(-a)(i) = i for every member i <= N; requires N > frobenius+2.
// Solved by forward substitution in ascending member order; an
// unsatisfiable row throws NoSolution.
std::map<int, Rational> pointwise_expansion(int N, const NumericalSemigroup& a);

// Expands (1(x)t - t(x)1)^n (t^2(x)1 + n t(x)t + 1(x)t^2) as a two-variable
// polynomial (variables: left and right tensor factor) and reports the
// low-degree witness properties: every exponent is a member of <2,3> in both
// factors, and the total degree n+2 stays below the 2n floor that products
// of n augmentation-kernel elements must reach. Requires n >= 3.
struct TauWitness {
  MultiPoly poly{2};
  int total_degree = 0;
  bool exponents_in_semigroup = false;
  bool degree_below_product_floor = false;
  bool ok() const { return exponents_in_semigroup && degree_below_product_floor; }
};
TauWitness tau_witness(int n);

}  // namespace monodiff
