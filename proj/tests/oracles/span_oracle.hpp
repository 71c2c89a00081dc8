// Copyright 2026 The flatlim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles that share no code with the Groebner engine: ideal
// membership by linear algebra in a single degree, and Hilbert functions of
// monomial ideals by counting monomials.

#ifndef FLATLIM_TESTS_SPAN_ORACLE_HPP
#define FLATLIM_TESTS_SPAN_ORACLE_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

namespace oracle {

using Exps = std::array<int, 4>;
using Sparse = std::map<Exps, mpq_class>;

/// All exponent vectors of total degree n in 4 variables.
inline std::vector<Exps> monomials_of_degree(int n) {
  std::vector<Exps> out;
  for (int a = n; a >= 0; --a) {
    for (int b = n - a; b >= 0; --b) {
      for (int c = n - a - b; c >= 0; --c) out.push_back({a, b, c, n - a - b - c});
    }
  }
  return out;
}

inline int degree(const Exps& e) { return e[0] + e[1] + e[2] + e[3]; }

inline bool divides(const Exps& a, const Exps& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Is f (homogeneous of degree D) in the K-span of {m * g : deg m = D - deg g}?
/// Generators must be homogeneous. Row reduction over Q.
inline bool in_span(const Sparse& f, const std::vector<Sparse>& generators) {
  if (f.empty()) return true;
  int target = degree(f.begin()->first);
  std::vector<Exps> cols = monomials_of_degree(target);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;

  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    int shift = target - degree(g.begin()->first);
    if (shift < 0) continue;
    for (const auto& m : monomials_of_degree(shift)) {
      std::vector<mpq_class> row(cols.size());
      for (const auto& [e, c] : g) {
        Exps p{e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]};
        row[index.at(p)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  // Echelon form of the generator rows.
  std::vector<std::vector<mpq_class>> basis;
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<mpq_class>& v) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::size_t p = pivots[k];
      if (v[p] == 0) continue;
      mpq_class factor = v[p] / basis[k][p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * basis[k][j];
    }
  };
  for (auto& row : rows) {
    reduce(row);
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    // Keep earlier rows reduced against the new pivot too.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k][p] == 0) continue;
      mpq_class factor = basis[k][p] / row[p];
      for (std::size_t j = 0; j < row.size(); ++j) basis[k][j] -= factor * row[j];
    }
    basis.push_back(std::move(row));
    pivots.push_back(p);
  }
  std::vector<mpq_class> v(cols.size());
  for (const auto& [e, c] : f) v[index.at(e)] += c;
  reduce(v);
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

/// dim (R/M)_n for a monomial ideal M, by counting standard monomials.
inline long count_standard_monomials(const std::vector<Exps>& generators, int n) {
  long count = 0;
  for (const auto& m : monomials_of_degree(n)) {
    bool in_ideal = false;
    for (const auto& g : generators) {
      if (divides(g, m)) {
        in_ideal = true;
        break;
      }
    }
    if (!in_ideal) ++count;
  }
  return count;
}

}  // namespace oracle

#endif  // FLATLIM_TESTS_SPAN_ORACLE_HPP
