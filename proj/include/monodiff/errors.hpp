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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monodiff {

// Root of every exception thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Generator lists must have gcd 1 to define a numerical semigroup.
struct GcdNotOne : Error {
  explicit GcdNotOne(const std::string& what) : Error(what) {}
};

// An integer was required to lie in a semigroup (or an operator in a ring)
// and does not.
struct NotMember : Error {
  explicit NotMember(const std::string& what) : Error(what) {}
};

// Exact polynomial division requested with a nonzero remainder.
struct DivisionNotExact : Error {
  explicit DivisionNotExact(const std::string& what) : Error(what) {}
};

// Rational with zero denominator.
struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

// Bezout certificate requested for an all-zero family.
struct AllZero : Error {
  explicit AllZero(const std::string& what) : Error(what) {}
};

// Linear-system shapes disagree.
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// A triangular solve hit a zero diagonal.
struct NoSolution : Error {
  explicit NoSolution(const std::string& what) : Error(what) {}
};

// Input polynomial does not lie in the stated vanishing ideal.
struct NotInIdeal : Error {
  explicit NotInIdeal(const std::string& what) : Error(what) {}
};

// Zero polynomial where a nonzero one is required.
struct ZeroInput : Error {
  explicit ZeroInput(const std::string& what) : Error(what) {}
};

// Index outside the documented range.
struct BadIndex : Error {
  explicit BadIndex(const std::string& what) : Error(what) {}
};

// Counit of an operator whose image at 1 leaves the base coordinate ring.
struct CounitEscapesBase : Error {
  explicit CounitEscapesBase(const std::string& what) : Error(what) {}
};

// A tensor-presentation leg is not a member of its coring.
struct LegNotMember : Error {
  explicit LegNotMember(const std::string& what) : Error(what) {}
};

// The rewriting solver exhausted its degree budget.
struct NoPresentationWithinBound : Error {
  explicit NoPresentationWithinBound(const std::string& what) : Error(what) {}
};

// Antipode requested over a non-symmetric semigroup.
struct NotSymmetric : Error {
  explicit NotSymmetric(const std::string& what) : Error(what) {}
};

// Expression-parser failure; `offset` is the byte position in the input.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t offset_)
      : Error(what + " (at byte " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

}  // namespace monodiff
