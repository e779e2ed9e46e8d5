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
#include <utility>
#include <vector>

#include "monodiff/laurent.hpp"
#include "monodiff/semigroup.hpp"
#include "monodiff/unipoly.hpp"
#include "monodiff/weyl.hpp"

namespace monodiff {

// Linear functional D -> sum_i c_i * t^(a_i) * D(t^(b_i)) on operators,
// with a_i in the target semigroup and b_i in the source.
struct RFunctional {
  struct Term {
    Rational c;
    int a = 0;
    int b = 0;
  };
  std::vector<Term> terms;

  LaurentPoly act(const WeylElement& d) const;
};

// Column-finite idempotent operator on the operator ring: column b holds a
// polynomial f_b divisible by ell(-b) with f_b(b') = delta_{b b'} across the
// stored columns. Acts degree by degree: g t^d -> sum_b g(b) f_b t^d.
struct IdempotentElement {
  std::map<int, UniPoly> columns;

  bool is_zero() const { return columns.empty(); }
  std::vector<int> support() const;

  friend bool operator==(const IdempotentElement& a,
                         const IdempotentElement& b) {
    return a.columns == b.columns;
  }
  friend bool operator!=(const IdempotentElement& a,
                         const IdempotentElement& b) {
    return !(a == b);
  }
};

// Verifies the column invariants (divisibility and the delta property).
bool is_s_element(const IdempotentElement& pi, const SemigroupPair& pair);

// Composite outer(inner(.)): column b (over inner's support) is
// sum_a inner_b(a) * outer_a.  Zero columns are dropped.
IdempotentElement compose(const IdempotentElement& outer,
                          const IdempotentElement& inner);

// alpha + beta - beta o alpha; stays idempotent whenever alpha o beta = 0.
IdempotentElement orthogonal_sum(const IdempotentElement& alpha,
                                 const IdempotentElement& beta);

// Greedy support selection for f in the ideal of ell(d) (else NotInIdeal):
// repeatedly takes the smallest source member where f is nonzero and
// intersects with that member's escape set. Returns the chosen members in
// ascending order; empty for f = 0. The result satisfies: f is nonzero on
// each chosen b, d + b lies in the target, and each chosen b lies in the
// escape set of every other choice.
std::vector<int> select_support(const UniPoly& f, int d,
                                const SemigroupPair& pair);

// Splits f (nonzero, in the ideal of ell(d), else ZeroInput/NotInIdeal) as
// f = sum f(b_i) f_i over the selected support, where each f_i is divisible
// by ell(-b_i), f_i(b_j) = delta_ij, and f_i vanishes at every source member
// where f does. Built from a Bezout certificate for the gcd of the
// ell(-b_i).
std::vector<std::pair<int, UniPoly>> partition_of_unity(
    const UniPoly& f, int d, const SemigroupPair& pair);

IdempotentElement to_idempotent(
    const std::vector<std::pair<int, UniPoly>>& partition);

// pi applied to a member of the operator ring (else NotMember).
WeylElement apply_idempotent(const IdempotentElement& pi, const WeylElement& d,
                             const SemigroupPair& pair);

// Idempotent fixing every listed member (else NotMember): processes each
// homogeneous component in ascending degree, subtracts the part already
// fixed, splits the remainder with partition_of_unity, and absorbs it via
// orthogonal_sum. Empty input gives the zero idempotent.
IdempotentElement idempotent_for(const std::vector<WeylElement>& ds,
                                 const SemigroupPair& pair);

}  // namespace monodiff
