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

#include "monodiff/linalg.hpp"

#include <cassert>
#include <utility>

#include "monodiff/errors.hpp"

namespace monodiff {

std::optional<std::vector<Rational>> linear_solve(Matrix m,
                                                  std::vector<Rational> rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("rhs length != row count");
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  // pivot_col[r] = column of the pivot placed in row r.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      std::swap(rhs[p], rhs[r]);
    }
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational factor = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        m.at(i, j) -= factor * m.at(r, j);
      }
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    x[pivot_col[i]] = rhs[i];
  }
  return x;
}

XgcdResult xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly old_r = a, r = b;
  UniPoly old_s(Rational(1)), s;
  UniPoly old_t, t(Rational(1));
  while (!r.is_zero()) {
    auto [q, rem] = divrem(old_r, r);
    old_r = std::exchange(r, rem);
    UniPoly ns = old_s - q * s;
    old_s = std::exchange(s, ns);
    UniPoly nt = old_t - q * t;
    old_t = std::exchange(t, nt);
  }
  return {old_r, old_s, old_t};
}

BezoutResult bezout_many(const std::vector<UniPoly>& fs) {
  UniPoly g;
  std::vector<UniPoly> u(fs.size());
  bool any = false;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) continue;
    if (!any) {
      g = fs[i];
      u[i] = UniPoly(Rational(1));
      any = true;
      continue;
    }
    XgcdResult x = xgcd(g, fs[i]);
    for (auto& uj : u) uj = x.s * uj;
    u[i] = x.t;
    g = x.g;
  }
  if (!any) throw AllZero("gcd of an all-zero family");
  Rational inv = Rational(1) / g.lc();
  g = g.scaled(inv);
  for (auto& uj : u) uj = uj.scaled(inv);
#ifndef NDEBUG
  UniPoly check;
  for (std::size_t i = 0; i < fs.size(); ++i) check = check + u[i] * fs[i];
  assert(check == g && "Bezout certificate failed");
  for (const auto& f : fs) {
    if (!f.is_zero()) assert(divrem(f, g).second.is_zero());
  }
#endif
  return {g, u};
}

}  // namespace monodiff
