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
#include <utility>
#include <vector>

#include "monodiff/rational.hpp"
#include "monodiff/unipoly.hpp"

namespace monodiff {

using Exponents = std::vector<int>;

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically on the exponent vector.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with a fixed number of variables.
// Invariant: no zero coefficients are stored; every exponent vector has
// exactly nvars() entries, all nonnegative.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second.is_one() &&
           terms_.begin()->first == Exponents(nvars_, 0);
  }
  // -1 for the zero polynomial, mirroring UniPoly.
  int total_degree() const;
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  Rational evaluate(const std::vector<Rational>& point) const;

  // Canonical text, terms in descending graded-lex order. Default variable
  // names are x, y, z for up to three variables, x1..xn beyond that.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Integer affine form c0 + sum coef_i * x_{var_i}, used as a substitution
// image.
struct AffineForm {
  std::vector<std::pair<int, int>> terms;  // (variable index, coefficient)
  int constant = 0;
};

// f evaluated at one affine form, producing an nvars-variable polynomial.
MultiPoly compose_affine(const UniPoly& f, const AffineForm& image, int nvars);

// Substitutes an affine form for every variable of f (images.size() must
// equal f.nvars()); the result lives in new_nvars variables.
MultiPoly substitute_affine(const MultiPoly& f,
                            const std::vector<AffineForm>& images,
                            int new_nvars);

// f placed on the single variable `var` of an nvars-variable ring.
MultiPoly embed(const UniPoly& f, int nvars, int var);

// f(x_0 + x_1 + ... + x_{nvars-1}).
MultiPoly substitute_sum(const UniPoly& f, int nvars);

// Sets one variable to a rational value; arity is preserved and the variable
// no longer occurs in the result.
MultiPoly partial_eval(const MultiPoly& f, int var, const Rational& value);

// Converts a polynomial supported on a single variable back to UniPoly;
// throws DimensionMismatch if any other variable occurs.
UniPoly to_unipoly(const MultiPoly& f, int var);

}  // namespace monodiff
