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

#ifndef FLATLIM_TERM_ORDER_HPP
#define FLATLIM_TERM_ORDER_HPP

#include <cassert>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "flatlim/monomial.hpp"

namespace flatlim {

/// Nonnegative integer weights, one per variable, not all zero.
class WeightVector {
 public:
  WeightVector(std::vector<long> weights);  // NOLINT(google-explicit-constructor)
  WeightVector(std::initializer_list<long> weights) : WeightVector(std::vector<long>(weights)) {}

  /// (d, 2, 1, 1): x gets weight d, y weight 2, z and w weight 1.
  static WeightVector degeneration(long d) { return WeightVector({d, 2, 1, 1}); }

  std::size_t size() const { return weights_.size(); }
  long operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<long>& weights() const { return weights_; }
  std::string str() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<long> weights_;
};

template <std::size_t N>
long weight_degree(const BasicMonomial<N>& m, const WeightVector& omega) {
  if (omega.size() != N) throw DomainError("weight vector length does not match the ring");
  long s = 0;
  for (std::size_t i = 0; i < N; ++i) s += omega[i] * static_cast<long>(m.exponent(i));
  return s;
}

/// Monomial order on a fixed number of variables. Every kind is compiled to
/// an integer matrix whose rows are compared lexicographically, so
/// comparison cost does not depend on how deeply orders are nested.
class TermOrder {
 public:
  enum class Kind { kLex, kGrevlex, kWeightRefined, kBlock };

  static TermOrder lex(std::size_t num_vars = kNumVars);
  static TermOrder grevlex(std::size_t num_vars = kNumVars);
  /// Compare omega-weights first, then fall back to `tie_break`.
  static TermOrder weight_refined(const WeightVector& omega, const TermOrder& tie_break);
  static TermOrder weight_refined(const WeightVector& omega) {
    return weight_refined(omega, grevlex(omega.size()));
  }
  /// Blocks of variables compared in sequence; `groups[i]` is ordered by
  /// `inner[i]`, whose variable count must equal the group size. The groups
  /// must partition all variables.
  static TermOrder block(std::vector<std::vector<std::size_t>> groups, std::vector<TermOrder> inner);

  /// Elimination order for the auxiliary variable t of the 5-variable ring:
  /// t-degree first, then grevlex on x, y, z, w.
  static TermOrder eliminate_aux();

  /// Parses "lex", "grevlex" or "weight(a,b,c,d)" (grevlex tie-break).
  static TermOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return num_vars_; }
  /// Canonical description; identical orders have identical names.
  const std::string& name() const { return name_; }
  const std::vector<long>& weights() const { return weights_; }

  template <std::size_t N>
  int compare(const BasicMonomial<N>& a, const BasicMonomial<N>& b) const {
    assert(N == num_vars_);
    if (kind_ == Kind::kGrevlex) return grevlex_compare(a, b);
    long diff[N];
    for (std::size_t i = 0; i < N; ++i) {
      diff[i] = static_cast<long>(a.exponent(i)) - static_cast<long>(b.exponent(i));
    }
    const long* row = rows_.data();
    for (std::size_t r = 0; r < num_rows_; ++r, row += N) {
      long s = 0;
      for (std::size_t i = 0; i < N; ++i) s += row[i] * diff[i];
      if (s != 0) return s > 0 ? 1 : -1;
    }
    return 0;
  }

  template <std::size_t N>
  bool greater(const BasicMonomial<N>& a, const BasicMonomial<N>& b) const {
    return compare(a, b) > 0;
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.name_ == b.name_; }

 private:
  TermOrder() = default;

  Kind kind_ = Kind::kGrevlex;
  std::size_t num_vars_ = 0;
  std::size_t num_rows_ = 0;
  std::vector<long> rows_;  // row-major, num_rows_ x num_vars_
  std::vector<long> weights_;
  std::string name_;
};

}  // namespace flatlim

#endif  // FLATLIM_TERM_ORDER_HPP
