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

#ifndef FLATLIM_GROEBNER_HPP
#define FLATLIM_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "flatlim/polynomial.hpp"
#include "flatlim/term_order.hpp"

namespace flatlim {

/// Reduced Groebner basis: monic elements sorted ascending by leading
/// monomial under `order`.
template <std::size_t N>
class GBasis {
 public:
  using Poly = BasicPolynomial<N>;
  using Mono = BasicMonomial<N>;

  GBasis(TermOrder order, Field field) : order_(std::move(order)), field_(field) {}

  /// Adopts elements that already form a reduced basis; normalizes them to
  /// monic and sorts. No Groebner property check is made here (see
  /// verify_groebner).
  static GBasis from_reduced(TermOrder order, Field field, std::vector<Poly> elements, bool truncated = false);

  const TermOrder& order() const { return order_; }
  Field field() const { return field_; }
  const std::vector<Poly>& elements() const { return elements_; }
  const std::vector<Mono>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  /// True when computed with a degree bound; then only valid up to it.
  bool truncated() const { return truncated_; }

  friend bool operator==(const GBasis& a, const GBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  TermOrder order_;
  Field field_;
  std::vector<Poly> elements_;
  std::vector<Mono> leads_;
  bool truncated_ = false;
};

struct GroebnerOptions {
  /// Drop S-pairs of graded degree above this bound. Only allowed when the
  /// input is homogeneous for `grading`.
  std::optional<long> degree_bound;
  /// Variable degrees used by the pair-selection strategy; empty means all 1.
  std::vector<long> grading;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped_by_criteria = 0;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal
/// selection strategy and the Gebauer-Moeller criteria. Deterministic for a
/// fixed input sequence and order.
template <std::size_t N>
GBasis<N> buchberger(const std::vector<BasicPolynomial<N>>& generators, const TermOrder& order,
                     const GroebnerOptions& options = {}, GroebnerStats* stats = nullptr);

/// Unique remainder of f modulo a Groebner basis; no term of it is
/// divisible by a leading monomial of the basis.
template <std::size_t N>
BasicPolynomial<N> normal_form(const BasicPolynomial<N>& f, const GBasis<N>& basis);

/// Checks that every S-polynomial of the basis reduces to zero.
template <std::size_t N>
bool verify_groebner(const GBasis<N>& basis);

/// Checks monic leads and that no term of an element is divisible by the
/// leading monomial of another.
template <std::size_t N>
bool is_reduced(const GBasis<N>& basis);

extern template class GBasis<kNumVars>;
extern template class GBasis<kElimVars>;

}  // namespace flatlim

#endif  // FLATLIM_GROEBNER_HPP
