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

#include <string>
#include <vector>

#include "monodiff/errors.hpp"

namespace monodiff {

// Immutable finite set of integers, kept sorted and deduplicated.
class FiniteIntSet {
 public:
  FiniteIntSet() = default;
  explicit FiniteIntSet(std::vector<int> values);

  bool contains(int n) const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<int>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  FiniteIntSet intersect(const FiniteIntSet& other) const;
  FiniteIntSet unite(const FiniteIntSet& other) const;
  // Elementwise translation {v + c}.
  FiniteIntSet shifted(int c) const;

  friend bool operator==(const FiniteIntSet& a, const FiniteIntSet& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(const FiniteIntSet& a, const FiniteIntSet& b) {
    return !(a == b);
  }

  // "{}", "{0, 3}".
  std::string str() const;

 private:
  std::vector<int> values_;
};

// Numerical semigroup: the set of nonnegative integer combinations of a
// generator list with gcd 1. Contains 0 and every integer beyond its
// Frobenius number.
class NumericalSemigroup {
 public:
  // Generators must be positive with gcd 1 (else GcdNotOne). The list is
  // sorted and deduplicated.
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return generators_; }
  // Largest integer not in the semigroup; -1 when the semigroup is all of
  // the nonnegative integers.
  int frobenius() const { return frobenius_; }
  int multiplicity() const { return generators_.front(); }

  // False for negative n, table lookup up to the Frobenius number, true
  // beyond.
  bool contains(int n) const;
  std::vector<int> gaps() const;
  // Symmetric: z is a gap exactly when frobenius() - z is a member.
  bool is_symmetric() const;

  // Membership table for 0..frobenius()+max(generators); the tail past the
  // Frobenius number is identically true.
  const std::vector<bool>& membership_table() const { return table_; }

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }
  friend bool operator!=(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return !(a == b);
  }

  // "<2,3>".
  std::string str() const;

 private:
  std::vector<int> generators_;
  int frobenius_ = -1;
  std::vector<bool> table_;
};

// {i in B : i + d not in A}. Finite for every integer d.
FiniteIntSet z_set(int d, const NumericalSemigroup& B,
                   const NumericalSemigroup& A);

// Smallest member of S in each residue class mod a; a must be a nonzero
// member (else NotMember). Always has exactly a elements.
FiniteIntSet apery_set(const NumericalSemigroup& S, int a);

}  // namespace monodiff
