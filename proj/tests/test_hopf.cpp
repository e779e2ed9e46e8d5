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

#include "monodiff/errors.hpp"
#include "monodiff/hopf.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/serialize.hpp"
#include "monodiff/weyl.hpp"

using namespace monodiff;

namespace {

const SemigroupPair& cusp_pair() {
  static const SemigroupPair pair =
      SemigroupPair::diagonal(NumericalSemigroup({2, 3}));
  return pair;
}

const NumericalSemigroup& cusp() { return cusp_pair().target; }

UniPoly roots(std::vector<int> rs) { return UniPoly::from_roots(rs); }

TensorLeg leg(const WeylElement& d) {
  REQUIRE(d.support().size() == 1);
  int deg = d.support().front();
  return TensorLeg{d.component(deg), deg};
}

TensorSummand summand(const WeylElement& l, const WeylElement& r) {
  return TensorSummand{leg(l), leg(r)};
}

}  // namespace

TEST_CASE("counit") {
  const SemigroupPair& p = cusp_pair();
  CHECK(counit(WeylElement::euler(), p).is_zero());
  CHECK(counit(generator_L(-2, p), p).is_zero());
  CHECK(counit(WeylElement::one(), p) == LaurentPoly::monomial(0));
  CHECK(counit(WeylElement::t_power(2), p) == LaurentPoly::monomial(2));
  CHECK(counit(WeylElement::t_power(2) - WeylElement::euler(), p) ==
        LaurentPoly::monomial(2));
  CHECK_THROWS_AS(counit(WeylElement::partial(), p), const NotMember&);

  SemigroupPair line_to_cusp{NumericalSemigroup({1}),
                             NumericalSemigroup({2, 3})};
  // ell(0) = x - 1 has constant coefficient -1.
  CHECK(counit(generator_L(0, line_to_cusp), line_to_cusp) ==
        LaurentPoly::monomial(0, Rational(-1)));
}

TEST_CASE("coproduct normal forms") {
  NormalForm nf = coproduct_normal_form(generator_L(-2, cusp_pair()));
  MultiPoly expect(2);
  expect.add_term({2, 0}, Rational(1));
  expect.add_term({1, 1}, Rational(2));
  expect.add_term({0, 2}, Rational(1));
  expect.add_term({1, 0}, Rational(-3));
  expect.add_term({0, 1}, Rational(-3));
  CHECK(nf.components.size() == 1);
  CHECK(nf.components.at(-2) == expect);

  NormalForm zero = coproduct_normal_form(WeylElement::zero());
  CHECK(zero.is_zero());
  CHECK(zero == NormalForm{});
}

TEST_CASE("presentation image and validation on a known split") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  WeylElement one = WeylElement::one();

  // D0 is primitive: D0 (x) 1 + 1 (x) D0.
  TensorPresentation prim{p, BaseRing::A,
                          {summand(d0, one), summand(one, d0)}};
  CHECK(presentation_image(prim) == coproduct_normal_form(d0));
  ValidationReport rep = validate_presentation(prim, d0);
  CHECK(rep.legs_ok);
  CHECK(rep.image_matches);
  CHECK(rep.leibniz_matches);
  CHECK(rep.checks_agree());
  CHECK(rep.valid());
  CHECK(check_coassoc(d0, prim));
  CHECK(check_cocommutative(prim));
  CHECK(check_counit_laws(prim, d0));
  CHECK(check_takeuchi(prim, d0));

  // A wrong split is caught by both the image and the product rule.
  TensorPresentation wrong{p, BaseRing::A, {summand(d0, one)}};
  ValidationReport bad = validate_presentation(wrong, d0);
  CHECK(bad.legs_ok);
  CHECK(!bad.image_matches);
  CHECK(!bad.leibniz_matches);
  CHECK(bad.checks_agree());
  CHECK(!bad.valid());

  // Legs outside the coring are reported per summand.
  TensorPresentation escaped{
      p, BaseRing::A,
      {TensorSummand{TensorLeg{roots({0}), -1}, leg(one)}}};
  ValidationReport esc = validate_presentation(escaped, WeylElement::partial());
  CHECK(!esc.legs_ok);
  CHECK(esc.summand_legs.size() == 1);
  CHECK(!esc.summand_legs[0].first);
  CHECK(esc.summand_legs[0].second);
  CHECK_THROWS_AS(presentation_image(escaped), const LegNotMember&);
}

TEST_CASE("reference split of the first cusp generator") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  WeylElement one = WeylElement::one();
  WeylElement lm2 = generator_L(-2, p);
  WeylElement lm3 = generator_L(-3, p);
  WeylElement l1 = generator_L(1, p);

  TensorPresentation pres{p, BaseRing::A,
                          {summand(lm2, one),
                           summand(d0.scaled(Rational(2)), (d0 - one) * lm2),
                           summand(l1.scaled(Rational(-2)), lm3),
                           summand(one, lm2)}};
  CHECK(validate_presentation(pres, lm2).valid());
  CHECK(check_coassoc(lm2, pres));
  CHECK(check_cocommutative(pres));
  CHECK(check_counit_laws(pres, lm2));
  CHECK(check_takeuchi(pres, lm2));
  CHECK(pres.total_degree() == 4);
}

TEST_CASE("rewriting the coproduct of a primitive element") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  TensorPresentation pres = rewrite_coproduct(d0, p, BaseRing::A);
  REQUIRE(pres.summands.size() == 2);
  CHECK(pres.summands[0].left.poly == roots({0}));
  CHECK(pres.summands[0].left.deg == 0);
  CHECK(pres.summands[0].right.poly.is_one());
  CHECK(pres.summands[1].left.poly.is_one());
  CHECK(pres.summands[1].right.poly == roots({0}));
  CHECK(validate_presentation(pres, d0).valid());
  CHECK(pres.total_degree() == 1);
}

TEST_CASE("rewriting needs degree four for the first cusp generator") {
  const SemigroupPair& p = cusp_pair();
  WeylElement lm2 = generator_L(-2, p);
  CHECK_THROWS_AS(rewrite_coproduct(lm2, p, BaseRing::A, 2),
                  const NoPresentationWithinBound&);
  CHECK_THROWS_AS(rewrite_coproduct(lm2, p, BaseRing::A, 3),
                  const NoPresentationWithinBound&);
  TensorPresentation pres = rewrite_coproduct(lm2, p, BaseRing::A);
  CHECK(pres.total_degree() == 4);
  CHECK(validate_presentation(pres, lm2).valid());
  CHECK(check_coassoc(lm2, pres));
  CHECK(check_cocommutative(pres));
  CHECK(check_counit_laws(pres, lm2));
  CHECK(check_takeuchi(pres, lm2));
  CHECK_THROWS_AS(rewrite_coproduct(WeylElement::partial(), p, BaseRing::A),
                  const NotMember&);
}

TEST_CASE("rewriting over the mixed pair, base on the source side") {
  // Over (source <1>, target <2,3>) with the base tag on the source, legs
  // live in the opposite coring (source <2,3>, target <1>).
  SemigroupPair ba{NumericalSemigroup({1}), NumericalSemigroup({2, 3})};
  SemigroupPair ab{NumericalSemigroup({2, 3}), NumericalSemigroup({1})};

  TensorPresentation one_split =
      rewrite_coproduct(WeylElement::one(), ba, BaseRing::B);
  REQUIRE(one_split.summands.size() == 1);
  CHECK(one_split.summands[0].left.poly.is_one());
  CHECK(one_split.summands[0].left.deg == 0);
  CHECK(one_split.summands[0].right.poly.is_one());
  CHECK(one_split.summands[0].right.deg == 0);
  CHECK(validate_presentation(one_split, WeylElement::one()).valid());

  // x t^-2 is the canonical degree -2 member there and stays primitive.
  WeylElement lm2_ab = generator_L(-2, ab);
  CHECK(lm2_ab == WeylElement::from_term(roots({0}), -2));
  TensorPresentation split = rewrite_coproduct(lm2_ab, ba, BaseRing::B);
  REQUIRE(split.summands.size() == 2);
  CHECK(validate_presentation(split, lm2_ab).valid());
  CHECK(split.summands[0].left.poly == roots({0}));
  CHECK(split.summands[0].right.poly.is_one());
  CHECK(split.summands[1].left.poly.is_one());
  CHECK(split.summands[1].right.poly == roots({0}));
}

TEST_CASE("rewriting over the mixed pair, base on the target side") {
  SemigroupPair ba{NumericalSemigroup({1}), NumericalSemigroup({2, 3})};
  WeylElement t2 = WeylElement::t_power(2);
  WeylElement l0 = generator_L(0, ba);  // (x-1) t^0

  TensorPresentation t2_split = rewrite_coproduct(t2, ba, BaseRing::A);
  CHECK(validate_presentation(t2_split, t2).valid());

  TensorPresentation l0_split = rewrite_coproduct(l0, ba, BaseRing::A);
  CHECK(validate_presentation(l0_split, l0).valid());
  CHECK(check_counit_laws(l0_split, l0));
  CHECK(check_takeuchi(l0_split, l0));
}

TEST_CASE("antipode") {
  const NumericalSemigroup& a = cusp();
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  WeylElement one = WeylElement::one();
  WeylElement lm2 = generator_L(-2, p);
  WeylElement lm3 = generator_L(-3, p);

  CHECK(antipode(d0, a) == one - d0);
  CHECK(antipode(lm2, a) == lm2);
  CHECK(antipode(lm3, a) == -lm3);
  CHECK(antipode(one, a) == one);
  CHECK(antipode(WeylElement::t_power(2), a) == WeylElement::t_power(2));

  // Involution and anti-homomorphism.
  WeylElement sample = d0 * lm2 + WeylElement::t_power(3).scaled(Rational(5));
  CHECK(antipode(antipode(sample, a), a) == sample);
  CHECK(antipode(d0 * lm2, a) == antipode(lm2, a) * antipode(d0, a));
  CHECK(antipode(lm2 * lm3, a) == antipode(lm3, a) * antipode(lm2, a));

  CHECK_THROWS_AS(antipode(WeylElement::partial(), a), const NotMember&);
  CHECK_THROWS_AS(antipode(d0, NumericalSemigroup({3, 4, 5})),
                  const NotSymmetric&);

  // Right augmentation: evaluate each coefficient at F - d.
  CHECK(right_augmentation(d0, a) == LaurentPoly::monomial(0));
  CHECK(right_augmentation(lm2, a).is_zero());
  CHECK(right_augmentation(WeylElement::t_power(2), a) ==
        LaurentPoly::monomial(2));
}

TEST_CASE("translation coordinates and the torsor maps") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d0 = WeylElement::euler();
  WeylElement lm2 = generator_L(-2, p);

  // Component d of the translation tensor is f_d(x - y - d).
  NormalForm tr = translation_normal_form(lm2);
  MultiPoly expect = compose_affine(roots({0, 3}),
                                    AffineForm{{{0, 1}, {1, -1}}, 2}, 2);
  CHECK(tr.components.at(-2) == expect);

  // The torsor maps are mutually inverse and connect the two coordinate
  // systems: forward takes the translation tensor of D to D (x) 1.
  NormalForm d_tensor_one;
  d_tensor_one.add_component(0, embed(roots({0}), 2, 0));
  CHECK(galois_map(translation_normal_form(d0)) == d_tensor_one);
  CHECK(galois_inverse(galois_map(tr)) == tr);
  CHECK(galois_map(galois_inverse(tr)) == tr);
}

TEST_CASE("rewriting the translation tensor") {
  const NumericalSemigroup& a = cusp();
  WeylElement d0 = WeylElement::euler();

  TensorPresentation pres = rewrite_translation(d0, a);
  REQUIRE(pres.summands.size() == 2);
  // D0 (x) 1 - 1 (x) D0 in translation coordinates.
  CHECK(pres.summands[0].left.poly == roots({0}));
  CHECK(pres.summands[0].right.poly.is_one());
  CHECK(pres.summands[1].left.poly == UniPoly(Rational(-1)));
  CHECK(pres.summands[1].right.poly == roots({0}));

  NormalForm image = translation_presentation_image(pres);
  CHECK(image == translation_normal_form(d0));

  // t^2 splits with a pure right leg carrying the t-power.
  WeylElement t2 = WeylElement::t_power(2);
  TensorPresentation t2_pres = rewrite_translation(t2, a);
  CHECK(translation_presentation_image(t2_pres) ==
        translation_normal_form(t2));
  // Both legs are members of the ring.
  for (const auto& s : t2_pres.summands) {
    CHECK(divrem(s.left.poly, ell(s.left.deg, cusp_pair())).second.is_zero());
    CHECK(
        divrem(s.right.poly, ell(s.right.deg, cusp_pair())).second.is_zero());
  }

  WeylElement lm2 = generator_L(-2, cusp_pair());
  TensorPresentation lm2_pres = rewrite_translation(lm2, a);
  CHECK(translation_presentation_image(lm2_pres) ==
        translation_normal_form(lm2));
  // The torsor map carries the image to the coproduct-side tensor of
  // lm2 (x) 1.
  NormalForm lhs = galois_map(translation_presentation_image(lm2_pres));
  NormalForm expect_lm2;
  expect_lm2.add_component(-2, embed(roots({0, 3}), 2, 0));
  CHECK(lhs == expect_lm2);
}

TEST_CASE("conilpotency index") {
  const SemigroupPair& p = cusp_pair();
  CHECK(conilpotency_index(WeylElement::zero(), p) == 0);
  CHECK(conilpotency_index(WeylElement::one(), p) == 0);
  CHECK(conilpotency_index(WeylElement::t_power(2), p) == 0);
  CHECK(conilpotency_index(WeylElement::euler(), p) == 1);
  CHECK(conilpotency_index(generator_L(-2, p), p) == 2);
  CHECK(conilpotency_index(generator_L(-3, p), p) == 3);
  CHECK(conilpotency_index(pow(WeylElement::euler(), 2), p) == 2);
  CHECK(conilpotency_index(pow(WeylElement::euler(), 3), p) == 3);
  // Mixed supports take the max across components.
  CHECK(conilpotency_index(
            generator_L(-2, p) + WeylElement::t_power(2).scaled(Rational(7)),
            p) == 2);
}

TEST_CASE("json round trips") {
  const SemigroupPair& p = cusp_pair();
  WeylElement d = generator_L(-2, p) - WeylElement::euler().scaled(
                                           Rational(5, 3));
  CHECK(weyl_from_json(to_json(d)) == d);

  UniPoly f = roots({0, 3}).scaled(Rational(-1, 2));
  CHECK(unipoly_from_json(to_json(f)) == f);

  IdempotentElement pi;
  pi.columns[2] = f;
  CHECK(idempotent_from_json(to_json(pi)) == pi);

  TensorPresentation pres = rewrite_coproduct(WeylElement::euler(), p,
                                              BaseRing::A);
  TensorPresentation back = presentation_from_json(to_json(pres), p);
  CHECK(back.base == pres.base);
  REQUIRE(back.summands.size() == pres.summands.size());
  for (std::size_t i = 0; i < back.summands.size(); ++i) {
    CHECK(back.summands[i].left.poly == pres.summands[i].left.poly);
    CHECK(back.summands[i].left.deg == pres.summands[i].left.deg);
    CHECK(back.summands[i].right.poly == pres.summands[i].right.poly);
    CHECK(back.summands[i].right.deg == pres.summands[i].right.deg);
  }
  CHECK(presentation_image(back) == presentation_image(pres));

  json rep = to_json(validate_presentation(pres, WeylElement::euler()));
  CHECK(rep.at("valid").get<bool>());
  CHECK(rep.at("image_matches").get<bool>());
}

TEST_CASE("text emitters") {
  const SemigroupPair& p = cusp_pair();
  TensorPresentation pres =
      rewrite_coproduct(WeylElement::euler(), p, BaseRing::A);
  CHECK(presentation_text(pres) ==
        "(x # 1) (x)_A (1 # 1) + (1 # 1) (x)_A (x # 1)");

  NormalForm nf = coproduct_normal_form(WeylElement::euler());
  CHECK(nf.str() == "(x + y) # 1");
  CHECK(NormalForm{}.str() == "0");

  CHECK(latex(Rational(-1, 2)) == "-\\frac{1}{2}");
  CHECK(latex(Rational(7)) == "7");
  CHECK(latex(roots({0, 3})) == "x(x - 3)");
  CHECK(latex(roots({0, 3, 3})) == "x(x - 3)^{2}");
  CHECK(latex(roots({0, 3}).scaled(Rational(-1))) == "-x(x - 3)");
  // A presentation renders with the tensor symbol for its base tag.
  std::string tex = latex(pres);
  CHECK(tex.find("\\otimes_{A}") != std::string::npos);
  CHECK(tex.find("x") != std::string::npos);
}
