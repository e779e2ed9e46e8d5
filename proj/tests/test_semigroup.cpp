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

using namespace monodiff;

TEST_CASE("finite int sets") {
  FiniteIntSet s({3, 1, 3, -2});
  CHECK(s.values() == std::vector<int>{-2, 1, 3});
  CHECK(s.contains(1));
  CHECK(!s.contains(0));
  CHECK(s.size() == 3);
  CHECK(FiniteIntSet().empty());
  CHECK(s.intersect(FiniteIntSet({1, 2, 3})) == FiniteIntSet({1, 3}));
  CHECK(s.unite(FiniteIntSet({0})) == FiniteIntSet({-2, 0, 1, 3}));
  CHECK(s.shifted(2) == FiniteIntSet({0, 3, 5}));
  CHECK(s.str() == "{-2, 1, 3}");
  CHECK(FiniteIntSet().str() == "{}");
}

TEST_CASE("cusp semigroup <2,3>") {
  NumericalSemigroup s({2, 3});
  CHECK(s.frobenius() == 1);
  CHECK(s.multiplicity() == 2);
  CHECK(s.gaps() == std::vector<int>{1});
  CHECK(s.is_symmetric());
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.contains(2));
  CHECK(s.contains(100));
  CHECK(!s.contains(-3));
  CHECK(s.str() == "<2,3>");
  CHECK(apery_set(s, 2) == FiniteIntSet({0, 3}));
}

TEST_CASE("semigroup <3,5>") {
  NumericalSemigroup s({3, 5});
  CHECK(s.frobenius() == 7);
  CHECK(s.gaps() == std::vector<int>{1, 2, 4, 7});
  CHECK(s.is_symmetric());
  CHECK(apery_set(s, 3) == FiniteIntSet({0, 5, 10}));
  CHECK(apery_set(s, 5) == FiniteIntSet({0, 3, 6, 9, 12}));
  CHECK_THROWS_AS(apery_set(s, 4), const NotMember&);
  CHECK_THROWS_AS(apery_set(s, 0), const NotMember&);
}

TEST_CASE("non-symmetric semigroup <3,4,5>") {
  NumericalSemigroup s({3, 4, 5});
  CHECK(s.frobenius() == 2);
  CHECK(s.gaps() == std::vector<int>{1, 2});
  CHECK(!s.is_symmetric());
}

TEST_CASE("the full semigroup <1>") {
  NumericalSemigroup s({1});
  CHECK(s.frobenius() == -1);
  CHECK(s.gaps().empty());
  CHECK(s.is_symmetric());
  CHECK(s.contains(0));
  CHECK(s.contains(7));
  CHECK(!s.contains(-1));
}

TEST_CASE("generator list normalization and validation") {
  NumericalSemigroup s({3, 3, 2});
  CHECK(s.generators() == std::vector<int>{2, 3});
  CHECK(NumericalSemigroup({4, 6, 9}).frobenius() == 11);
  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), const GcdNotOne&);
  CHECK_THROWS_AS(NumericalSemigroup({6, 10}), const GcdNotOne&);
  CHECK_THROWS_AS(NumericalSemigroup({3}), const GcdNotOne&);
  CHECK_THROWS_AS(NumericalSemigroup({}), const Error&);
  CHECK_THROWS_AS(NumericalSemigroup({0, 2, 3}), const Error&);
  CHECK_THROWS_AS(NumericalSemigroup({-2, 3}), const Error&);
}

TEST_CASE("escape sets") {
  NumericalSemigroup cusp({2, 3});
  NumericalSemigroup line({1});

  CHECK(z_set(0, cusp, cusp).empty());
  CHECK(z_set(1, cusp, cusp) == FiniteIntSet({0}));
  CHECK(z_set(2, cusp, cusp).empty());
  CHECK(z_set(-1, cusp, cusp) == FiniteIntSet({0, 2}));
  CHECK(z_set(-2, cusp, cusp) == FiniteIntSet({0, 3}));
  CHECK(z_set(-3, cusp, cusp) == FiniteIntSet({0, 2, 4}));
  CHECK(z_set(-4, cusp, cusp) == FiniteIntSet({0, 2, 3, 5}));
  CHECK(z_set(-5, cusp, cusp) == FiniteIntSet({0, 2, 3, 4, 6}));

  CHECK(z_set(0, line, cusp) == FiniteIntSet({1}));
  CHECK(z_set(1, line, cusp) == FiniteIntSet({0}));
  CHECK(z_set(2, line, cusp).empty());
  CHECK(z_set(-1, line, cusp) == FiniteIntSet({0, 2}));
  CHECK(z_set(-2, line, cusp) == FiniteIntSet({0, 1, 3}));

  CHECK(z_set(0, cusp, line).empty());
  CHECK(z_set(-1, cusp, line) == FiniteIntSet({0}));
  CHECK(z_set(-2, cusp, line) == FiniteIntSet({0}));
  CHECK(z_set(-3, cusp, line) == FiniteIntSet({0, 2}));
}

TEST_CASE("escape set laws on random semigroups") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> gen_dist(2, 12);
  std::uniform_int_distribution<int> d_dist(-20, 20);
  int built = 0;
  while (built < 25) {
    std::vector<int> gens = {gen_dist(rng), gen_dist(rng), gen_dist(rng)};
    NumericalSemigroup a = [&]() -> NumericalSemigroup {
      try {
        return NumericalSemigroup(gens);
      } catch (const GcdNotOne&) {
        return NumericalSemigroup({2, 3});
      }
    }();
    ++built;
    int d = d_dist(rng);
    FiniteIntSet z = z_set(d, a, a);

    // Every escape element is a member whose shift by d is not.
    for (int i : z) {
      CHECK(a.contains(i));
      CHECK(!a.contains(i + d));
      CHECK(i <= a.frobenius() - d);
    }
    // Nonnegative member shifts escape nowhere new: d in a means the escape
    // set avoids members i with i + d past the Frobenius number.
    if (a.contains(d)) {
      FiniteIntSet z0 = z_set(0, a, a);
      CHECK(z0.empty());
      // Monotone inclusion: adding a member degree keeps escapes inside.
      for (int i : z_set(d, a, a)) CHECK(!a.contains(i + d));
    }
    // Apery law: exactly m classes for the multiplicity.
    CHECK(apery_set(a, a.multiplicity()).size() ==
          static_cast<std::size_t>(a.multiplicity()));
    // Symmetry detection agrees with the gap reflection property.
    bool reflect = true;
    for (int gap : a.gaps()) {
      if (!a.contains(a.frobenius() - gap)) reflect = false;
    }
    CHECK(a.is_symmetric() == reflect);
  }
}
