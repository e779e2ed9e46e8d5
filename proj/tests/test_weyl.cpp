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

#include <doctest.h>

#include <random>

#include "monodiff/errors.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/weyl.hpp"

using namespace monodiff;

namespace {

const SemigroupPair& cusp_pair() {
  static const SemigroupPair pair =
      SemigroupPair::diagonal(NumericalSemigroup({2, 3}));
  return pair;
}

UniPoly roots(std::vector<int> rs) { return UniPoly::from_roots(rs); }

}  // namespace

TEST_CASE("twisted multiplication") {
  // t^a t^b = t^(a+b).
  CHECK(WeylElement::t_power(2) * WeylElement::t_power(-3) ==
        WeylElement::t_power(-1));
  // Moving t past a polynomial shifts the argument: the commutation rule
  // makes the derivative and the coordinate satisfy [del, t] = 1.
  WeylElement del = WeylElement::partial();
  WeylElement t = WeylElement::t_power(1);
  CHECK(del * t - t * del == WeylElement::one());
  // Scalars commute with everything.
  WeylElement half = WeylElement::t_power(0, Rational(1, 2));
  CHECK(half * del == del * half);
}

TEST_CASE("distinguished elements") {
  CHECK(WeylElement::euler() == WeylElement::from_term(roots({0}), 0));
  CHECK(WeylElement::partial() == WeylElement::from_term(roots({0}), -1));
  // del^j in crossed-product form: falling factorial times t^(-j).
  CHECK(pow(WeylElement::partial(), 2) ==
        WeylElement::from_term(roots({0, 1}), -2));
  CHECK(WeylElement::from_classical(0, 2) == pow(WeylElement::partial(), 2));
  CHECK(WeylElement::from_classical(1, 1) == WeylElement::euler());
  CHECK(WeylElement::from_classical(3, 1) ==
        WeylElement::from_term(roots({0}), 2));
  CHECK(WeylElement::from_classical(2, 0) == WeylElement::t_power(2));
  CHECK(pow(WeylElement::euler(), 0) == WeylElement::one());
}

TEST_CASE("action on the coordinate line") {
  WeylElement del = WeylElement::partial();
  // del t^a = a t^(a-1).
  CHECK(del.apply(LaurentPoly::monomial(5)) ==
        LaurentPoly::monomial(4, Rational(5)));
  CHECK(del.apply(LaurentPoly::monomial(0)).is_zero());
  // The Euler operator scales t^a by a.
  CHECK(WeylElement::euler().apply(LaurentPoly::monomial(-3)) ==
        LaurentPoly::monomial(-3, Rational(-3)));
  // Applying is linear and multiplicative in the operator.
  WeylElement d = del * del - WeylElement::euler();
  LaurentPoly v = LaurentPoly::monomial(4) + LaurentPoly::monomial(2);
  CHECK(d.apply(v) ==
        (del * del).apply(v) - WeylElement::euler().apply(v));
  CHECK((del * del).apply(v) == del.apply(del.apply(v)));
}

TEST_CASE("operator accessors") {
  WeylElement d = WeylElement::from_term(roots({0, 3}), -2) +
                  WeylElement::from_term(roots({0}), 1);
  CHECK(d.support() == std::vector<int>{-2, 1});
  CHECK(d.component(-2) == roots({0, 3}));
  CHECK(d.component(5).is_zero());
  CHECK(d.order() == 2);
  CHECK(WeylElement::zero().is_zero());
  CHECK(WeylElement::zero().order() == -1);
  CHECK((d - d).is_zero());
  CHECK(d.scaled(Rational(2)).component(1) == roots({0}).scaled(Rational(2)));
}

TEST_CASE("vanishing polynomials over the cusp") {
  const SemigroupPair& p = cusp_pair();
  CHECK(ell(0, p).is_one());
  CHECK(ell(1, p) == roots({0}));
  CHECK(ell(2, p).is_one());
  CHECK(ell(-1, p) == roots({0, 2}));
  CHECK(ell(-2, p) == roots({0, 3}));
  CHECK(ell(-3, p) == roots({0, 2, 4}));
  CHECK(ell(-4, p) == roots({0, 2, 3, 5}));

  SemigroupPair line_to_cusp{NumericalSemigroup({1}),
                             NumericalSemigroup({2, 3})};
  CHECK(ell(0, line_to_cusp) == roots({1}));
  CHECK(ell(1, line_to_cusp) == roots({0}));
  CHECK(ell(2, line_to_cusp).is_one());
  CHECK(ell(-1, line_to_cusp) == roots({0, 2}));
  CHECK(ell(-2, line_to_cusp) == roots({0, 1, 3}));

  SemigroupPair cusp_to_line{NumericalSemigroup({2, 3}),
                             NumericalSemigroup({1})};
  CHECK(ell(0, cusp_to_line).is_one());
  CHECK(ell(1, cusp_to_line).is_one());
  CHECK(ell(-1, cusp_to_line) == roots({0}));
  CHECK(ell(-2, cusp_to_line) == roots({0}));
  CHECK(ell(-3, cusp_to_line) == roots({0, 2}));

  CHECK(generator_L(-2, p) == WeylElement::from_term(roots({0, 3}), -2));
  CHECK(generator_L(1, p) == WeylElement::from_term(roots({0}), 1));
  CHECK(generator_L(0, p) == WeylElement::one());
}

TEST_CASE("product oracles over the cusp") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  WeylElement one = WeylElement::one();
  WeylElement lm2 = generator_L(-2, p);
  WeylElement lm3 = generator_L(-3, p);

  // (D0 - 1) L(-2) = x (x-3)^2 t^-2.
  CHECK((d0 - one) * lm2 ==
        WeylElement::from_term(roots({0, 3, 3}), -2));
  // (D0 - 1) L(-3) = x (x-2) (x-4)^2 t^-3.
  CHECK((d0 - one) * lm3 ==
        WeylElement::from_term(roots({0, 2, 4, 4}), -3));
  // L(-2)^2 = x (x-2) (x-3) (x-5) t^-4.
  CHECK(lm2 * lm2 == WeylElement::from_term(roots({0, 2, 3, 5}), -4));
  // t^2 D0 = x t^2.
  CHECK(WeylElement::t_power(2) * d0 == WeylElement::from_term(roots({0}), 2));
}

TEST_CASE("membership") {
  const SemigroupPair& p = cusp_pair();
  CHECK(is_member(WeylElement::euler(), p));
  CHECK(is_member(WeylElement::one(), p));
  CHECK(is_member(WeylElement::zero(), p));
  CHECK(is_member(WeylElement::t_power(2), p));
  CHECK(is_member(WeylElement::t_power(3), p));
  CHECK(!is_member(WeylElement::t_power(1), p));
  CHECK(!is_member(WeylElement::partial(), p));
  CHECK(is_member(generator_L(-2, p) * generator_L(-3, p), p));
  CHECK(is_member(generator_L(-2, p) + WeylElement::t_power(2), p));

  // Scalar multiples and sums of members stay members.
  WeylElement mixed =
      generator_L(-1, p).scaled(Rational(3, 7)) - WeylElement::euler();
  CHECK(is_member(mixed, p));
}

TEST_CASE("membership agrees with the pointwise action") {
  const SemigroupPair& p = cusp_pair();
  SemigroupPair p35 = SemigroupPair::diagonal(NumericalSemigroup({3, 5}));
  std::mt19937_64 rng(1337);
  std::uniform_int_distribution<int> d_dist(-5, 5);
  std::uniform_int_distribution<int> extra_dist(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const SemigroupPair& pair = trial % 2 == 0 ? p : p35;
    int d = d_dist(rng);
    // Half the samples are exact multiples of ell(d); the rest perturb the
    // polynomial so most fail membership.
    UniPoly f = ell(d, pair) * UniPoly::from_roots({extra_dist(rng)});
    if (trial % 4 == 3) f = f + UniPoly(Rational(1));
    WeylElement elt = WeylElement::from_term(f, d);
    CHECK(is_member(elt, pair) == is_member_pointwise(elt, pair));
  }
}

TEST_CASE("integer root factorization") {
  UniPoly f = UniPoly::from_coeffs({Rational(10), Rational(-7), Rational(1)});
  IntegerFactorization fac = factor_integer_roots(f);
  CHECK(fac.splits);
  CHECK(fac.roots == std::vector<int>{2, 5});
  CHECK(fac.lead == Rational(1));

  IntegerFactorization irr = factor_integer_roots(
      UniPoly::from_coeffs({Rational(1), Rational(0), Rational(1)}));
  CHECK(!irr.splits);

  IntegerFactorization scaled = factor_integer_roots(roots({0, 3}).scaled(
      Rational(-2)));
  CHECK(scaled.splits);
  CHECK(scaled.lead == Rational(-2));
  CHECK(scaled.roots == std::vector<int>{0, 3});
}

TEST_CASE("operator text") {
  CHECK(WeylElement::zero().str() == "0");
  CHECK(WeylElement::one().str() == "1 # 1");
  CHECK(WeylElement::euler().str() == "x # 1");
  CHECK(WeylElement::partial().str() == "x # t^-1");
  CHECK(generator_L(-2, cusp_pair()).str() == "x*(x-3) # t^-2");
  CHECK((WeylElement::euler() - WeylElement::one()).str() == "(x-1) # 1");
  CHECK(t_power_text(0) == "1");
  CHECK(t_power_text(1) == "t");
  CHECK(t_power_text(-2) == "t^-2");
}

TEST_CASE("cusp relation suite") {
  RelationsReport report = relations_cusp_check();
  CHECK(report.all_ok());
  CHECK(report.identities.size() >= 4);
  for (const auto& check : report.identities) {
    INFO(check.name);
    CHECK(check.holds);
  }
}

TEST_CASE("pointwise expansion of the identity") {
  auto coeffs = pointwise_expansion(10, NumericalSemigroup({2, 3}));
  CHECK(!coeffs.empty());
  for (const auto& [a, c] : coeffs) {
    INFO("a = ", a);
    CHECK(c == Rational(-1));
  }
  // The certificate property: sum_a c_a ell(-a)(i) = i for members i.
  NumericalSemigroup cusp({2, 3});
  SemigroupPair p = cusp_pair();
  for (int i = 0; i <= 10; ++i) {
    if (!cusp.contains(i)) continue;
    Rational total(0);
    for (const auto& [a, c] : coeffs) {
      total = total + c * ell(-a, p).evaluate(Rational(i));
    }
    CHECK(total == Rational(i));
  }
}

TEST_CASE("augmentation-kernel degree witnesses") {
  TauWitness w3 = tau_witness(3);
  MultiPoly expect(2);
  expect.add_term({5, 0}, Rational(-1));
  expect.add_term({3, 2}, Rational(5));
  expect.add_term({2, 3}, Rational(-5));
  expect.add_term({0, 5}, Rational(1));
  CHECK(w3.poly == expect);
  CHECK(w3.total_degree == 5);
  CHECK(w3.ok());

  for (int n = 3; n <= 8; ++n) {
    TauWitness w = tau_witness(n);
    INFO("n = ", n);
    CHECK(w.exponents_in_semigroup);
    CHECK(w.degree_below_product_floor);
    CHECK(w.total_degree == n + 2);
    CHECK(w.ok());
  }
}
