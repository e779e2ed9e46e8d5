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

#include "monodiff/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace monodiff {

FiniteIntSet::FiniteIntSet(std::vector<int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool FiniteIntSet::contains(int n) const {
  return std::binary_search(values_.begin(), values_.end(), n);
}

FiniteIntSet FiniteIntSet::intersect(const FiniteIntSet& other) const {
  std::vector<int> out;
  std::set_intersection(values_.begin(), values_.end(), other.values_.begin(),
                        other.values_.end(), std::back_inserter(out));
  return FiniteIntSet(std::move(out));
}

FiniteIntSet FiniteIntSet::unite(const FiniteIntSet& other) const {
  std::vector<int> out;
  std::set_union(values_.begin(), values_.end(), other.values_.begin(),
                 other.values_.end(), std::back_inserter(out));
  return FiniteIntSet(std::move(out));
}

FiniteIntSet FiniteIntSet::shifted(int c) const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (int v : values_) out.push_back(v + c);
  return FiniteIntSet(std::move(out));
}

std::string FiniteIntSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error("empty generator list");
  for (int g : generators_) {
    if (g <= 0) throw Error("nonpositive generator " + std::to_string(g));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  int g = 0;
  for (int v : generators_) g = std::gcd(g, v);
  if (g != 1) {
    throw GcdNotOne("generators " + str() + " have gcd " + std::to_string(g));
  }

  // Sieve membership until multiplicity() consecutive members appear; from
  // there on every integer is a member, so the largest gap seen so far is
  // the Frobenius number.
  const int m = generators_.front();
  std::vector<bool> member{true};  // index 0
  int run = 1;                     // current streak of consecutive members
  int last_gap = -1;
  for (int n = 1; run < m; ++n) {
    bool in = false;
    for (int gen : generators_) {
      if (n >= gen && member[static_cast<std::size_t>(n - gen)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      last_gap = n;
    }
  }
  frobenius_ = last_gap;

  const int table_len = frobenius_ + generators_.back() + 1;
  table_.assign(static_cast<std::size_t>(std::max(table_len, 1)), true);
  for (std::size_t n = 0; n < table_.size(); ++n) {
    table_[n] = n < member.size() ? member[n] : true;
  }
}

bool NumericalSemigroup::contains(int n) const {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  return table_[static_cast<std::size_t>(n)];
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int n = 1; n <= frobenius_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  if (frobenius_ == -1) return true;
  for (int z = 0; z <= frobenius_; ++z) {
    if (contains(z) == contains(frobenius_ - z)) return false;
  }
  return true;
}

std::string NumericalSemigroup::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(generators_[i]);
  }
  return out + ">";
}

FiniteIntSet z_set(int d, const NumericalSemigroup& B,
                   const NumericalSemigroup& A) {
  std::vector<int> out;
  // i + d escapes A only when i + d <= frobenius(A).
  const int hi = A.frobenius() - d;
  for (int i = 0; i <= hi; ++i) {
    if (B.contains(i) && !A.contains(i + d)) out.push_back(i);
  }
  return FiniteIntSet(std::move(out));
}

FiniteIntSet apery_set(const NumericalSemigroup& S, int a) {
  if (a <= 0 || !S.contains(a)) {
    throw NotMember("Apery set requires a nonzero member, got " +
                    std::to_string(a));
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a));
  for (int r = 0; r < a; ++r) {
    int n = r;
    while (!S.contains(n)) n += a;
    out.push_back(n);
  }
  return FiniteIntSet(std::move(out));
}

}  // namespace monodiff
