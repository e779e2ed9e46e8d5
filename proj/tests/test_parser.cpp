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

#include <string>
#include <vector>

#include "monodiff/errors.hpp"
#include "monodiff/parser.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/weyl.hpp"

using namespace monodiff;

namespace {

const SemigroupPair& cusp_pair() {
  static const SemigroupPair pair =
      SemigroupPair::diagonal(NumericalSemigroup({2, 3}));
  return pair;
}

WeylElement eval(const std::string& text) {
  return evaluate(parse(text), cusp_pair());
}

}  // namespace

TEST_CASE("atoms") {
  CHECK(eval("t") == WeylElement::t_power(1));
  CHECK(eval("D0") == WeylElement::euler());
  CHECK(eval("partial") == WeylElement::partial());
  CHECK(eval("7") == WeylElement::t_power(0, Rational(7)));
  CHECK(eval("2/3") == WeylElement::t_power(0, Rational(2, 3)));
  CHECK(eval("L(-2)") == generator_L(-2, cusp_pair()));
  CHECK(eval("L(1)") == generator_L(1, cusp_pair()));
  CHECK(eval("L(+1)") == generator_L(1, cusp_pair()));
}

TEST_CASE("precedence and grouping") {
  CHECK(eval("t^2*D0") == WeylElement::t_power(2) * WeylElement::euler());
  CHECK(eval("-D0") == -WeylElement::euler());
  CHECK(eval("2*t^3 - t^2") ==
        WeylElement::t_power(3, Rational(2)) - WeylElement::t_power(2));
  CHECK(eval("t^2^2") == WeylElement::t_power(4));  // left-to-right powers
  CHECK(eval("(D0 - 1)*L(-2)") ==
        (WeylElement::euler() - WeylElement::one()) *
            generator_L(-2, cusp_pair()));
  CHECK(eval("partial^2") == pow(WeylElement::partial(), 2));
  CHECK(eval("- t^2 + 2*t^2") == WeylElement::t_power(2));
}

TEST_CASE("negative powers invert t-monomials only") {
  CHECK(eval("t^-1") == WeylElement::t_power(-1));
  CHECK(eval("2*t^-3") ==
        WeylElement::t_power(0, Rational(2)) * WeylElement::t_power(-3));
  CHECK(eval("(2*t^2)^-1") == WeylElement::t_power(-2, Rational(1, 2)));
  CHECK_THROWS_AS(eval("(t + 1)^-1"), const BadIndex&);
  CHECK_THROWS_AS(eval("D0^-1"), const BadIndex&);
  CHECK_THROWS_AS(eval("0^-1"), const BadIndex&);
}

TEST_CASE("worked expressions") {
  // The degree-zero generator of the cusp ring, written through the
  // defining relation of its negative-degree generators.
  CHECK(eval("t^2*(D0-1)*L(-2) - t^3*L(-3)") == WeylElement::euler());
  // The first negative generator in derivative coordinates.
  CHECK(eval("partial^2 - 2*t^-1*partial") == generator_L(-2, cusp_pair()));
}

TEST_CASE("syntax errors carry offsets") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const SyntaxError& e) {
      return e.offset;
    }
    FAIL("expected a syntax error for ", text);
    return 0;
  };
  CHECK(offset_of("t +") == 3);
  CHECK(offset_of("(t") == 2);
  CHECK(offset_of("t @ 2") == 2);
  CHECK(offset_of("foo") == 0);
  CHECK(offset_of("L(2,3)") == 3);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("t t") == 2);
  CHECK_THROWS_AS(parse("t^"), const SyntaxError&);
  CHECK_THROWS_AS(parse("L()"), const SyntaxError&);
  CHECK_THROWS_AS(parse("1/"), const SyntaxError&);
}

TEST_CASE("printing is canonical") {
  const std::vector<std::string> samples = {
      "t",
      "D0",
      "partial",
      "L(-2)",
      "7",
      "2/3",
      "t^2*D0",
      "-D0",
      "t^2*(D0-1)*L(-2) - t^3*L(-3)",
      "partial^2 - 2*t^-1*partial",
      "(2*t^2)^-1",
      "- t^2 + 2*t^2",
      "t^2 - (t^3 - t^4)",
      "2*(3 + t)",
  };
  for (const auto& text : samples) {
    INFO(text);
    OperatorExpr tree = parse(text);
    std::string printed = print(tree);
    // Reparsing the canonical text reproduces the tree (same print).
    CHECK(print(parse(printed)) == printed);
    // Canonical text evaluates to the same operator.
    CHECK(evaluate(parse(printed), cusp_pair()) ==
          evaluate(tree, cusp_pair()));
  }
}

TEST_CASE("evaluation does not enforce membership") {
  // partial is a perfectly good ambient operator even though it lies
  // outside the cusp ring; membership is the caller's concern.
  CHECK(!is_member(eval("partial"), cusp_pair()));
  CHECK(is_member(eval("partial^2 - 2*t^-1*partial"), cusp_pair()));
}
