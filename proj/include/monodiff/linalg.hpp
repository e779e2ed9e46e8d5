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

#include <optional>
#include <vector>

#include "monodiff/rational.hpp"
#include "monodiff/unipoly.hpp"

namespace monodiff {

// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Exact Gauss-Jordan solve of M x = rhs. Deterministic: pivots are chosen as
// the first nonzero entry scanning down each column in order, and free
// variables are set to zero. Returns nullopt for an inconsistent system;
// throws DimensionMismatch if rhs.size() != M.rows().
std::optional<std::vector<Rational>> linear_solve(Matrix m,
                                                  std::vector<Rational> rhs);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g and g a gcd of a, b
// (not normalized).
struct XgcdResult {
  UniPoly g, s, t;
};
XgcdResult xgcd(const UniPoly& a, const UniPoly& b);

// Monic gcd g of the family plus a Bezout certificate: sum u_i * f_i = g.
// Zero entries get zero cofactors; an all-zero family throws AllZero.
struct BezoutResult {
  UniPoly gcd;
  std::vector<UniPoly> cofactors;
};
BezoutResult bezout_many(const std::vector<UniPoly>& fs);

}  // namespace monodiff
