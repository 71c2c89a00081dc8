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

#ifndef FLATLIM_POLYNOMIAL_HPP
#define FLATLIM_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatlim/monomial.hpp"
#include "flatlim/scalar.hpp"
#include "flatlim/term_order.hpp"

namespace flatlim {

template <std::size_t N>
struct BasicTerm {
  Scalar coeff;
  BasicMonomial<N> mono;
};

/// Polynomial over a Field in N variables, canonically stored: terms
/// strictly descending in grevlex, no zero coefficients. Two polynomials
/// are equal iff their term sequences coincide.
template <std::size_t N>
class BasicPolynomial {
 public:
  using Term = BasicTerm<N>;
  using Mono = BasicMonomial<N>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(Field field) : field_(field) {}
  BasicPolynomial(const Scalar& c) : field_(c.field()) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.push_back({c, Mono()});
  }
  BasicPolynomial(const Scalar& c, const Mono& m) : field_(c.field()) {
    if (!c.is_zero()) terms_.push_back({c, m});
  }

  static BasicPolynomial var(std::size_t index, Field field = Field::rationals()) {
    return BasicPolynomial(Scalar::one(field), Mono::var(index));
  }

  /// Sorts, merges duplicate monomials and drops zeros.
  static BasicPolynomial from_terms(std::vector<Term> terms, Field field) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    BasicPolynomial p(field);
    for (auto& t : terms) {
      if (t.coeff.field() != field) throw DomainError("term coefficient is in the wrong field");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Adopts terms already in canonical order.
  static BasicPolynomial from_sorted_terms(std::vector<Term> terms, Field field) {
    BasicPolynomial p(field);
    p.terms_ = std::move(terms);
    return p;
  }

  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading term with respect to grevlex.
  const Term& leading_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.front();
  }

  /// Largest total degree; -1 for zero.
  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
    return d;
  }

  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono.exponent(var));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  /// True if only the listed variables occur.
  bool only_in(std::initializer_list<std::size_t> vars) const {
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < N; ++i) {
        if (t.mono.exponent(i) != 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
      }
    }
    return true;
  }

  Scalar coefficient(const Mono& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return Scalar::zero(field_);
  }

  Scalar evaluate(const std::array<Scalar, N>& point) const {
    Scalar total = Scalar::zero(field_);
    for (const auto& t : terms_) {
      Scalar v = t.coeff;
      for (std::size_t i = 0; i < N; ++i) {
        for (unsigned e = 0; e < t.mono.exponent(i); ++e) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, Scalar::one(a.field_));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, -Scalar::one(a.field_));
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(a.field_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);
    if (a.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].mono);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.coeff * t.coeff, s.mono * t.mono});
    }
    return from_terms(std::move(out), a.field_);
  }
  friend BasicPolynomial operator*(const Scalar& c, const BasicPolynomial& p) {
    return p.mul_term(c, Mono());
  }

  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = *this - b; }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  BasicPolynomial mul_term(const Scalar& c, const Mono& m) const {
    BasicPolynomial r(field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves grevlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
    return r;
  }

  BasicPolynomial pow(unsigned e) const {
    BasicPolynomial result(Scalar::one(field_));
    BasicPolynomial base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return a.field_ == b.field_ || a.is_zero();
  }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  /// Terms printed in descending grevlex order, e.g. "x^2 - 2/3*y*z + w".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      Scalar c = t.coeff;
      bool negative = c.sign() < 0;
      if (negative) c = -c;
      if (i == 0) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += c.str();
      } else if (c.is_one()) {
        out += t.mono.str();
      } else {
        out += c.str() + "*" + t.mono.str();
      }
    }
    return out;
  }

 private:
  static void require_same_field(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (!(a.field_ == b.field_)) throw DomainError("polynomials over different fields");
  }

  // a + sign * b by merging.
  static BasicPolynomial combine(const BasicPolynomial& a, const BasicPolynomial& b, const Scalar& sign) {
    require_same_field(a, b);
    BasicPolynomial r(a.field_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({sign * b.terms_[j].coeff, b.terms_[j].mono});
        ++j;
      } else {
        Scalar s = a.terms_[i].coeff + sign * b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({std::move(s), a.terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Field field_;
  std::vector<Term> terms_;
};

using Term = BasicTerm<kNumVars>;
using Polynomial = BasicPolynomial<kNumVars>;
using ElimPolynomial = BasicPolynomial<kElimVars>;

/// Sum of the terms of maximal omega-weight. Throws DomainError on zero.
template <std::size_t N>
BasicPolynomial<N> initial_form(const BasicPolynomial<N>& f, const WeightVector& omega) {
  if (f.is_zero()) throw DomainError("initial form of the zero polynomial");
  long best = -1;
  for (const auto& t : f.terms()) best = std::max(best, weight_degree(t.mono, omega));
  std::vector<BasicTerm<N>> kept;
  for (const auto& t : f.terms()) {
    if (weight_degree(t.mono, omega) == best) kept.push_back(t);
  }
  return BasicPolynomial<N>::from_sorted_terms(std::move(kept), f.field());
}

template <std::size_t N>
bool is_weight_homogeneous(const BasicPolynomial<N>& f, const WeightVector& omega) {
  if (f.is_zero()) return true;
  long w = weight_degree(f.terms().front().mono, omega);
  for (const auto& t : f.terms()) {
    if (weight_degree(t.mono, omega) != w) return false;
  }
  return true;
}

/// Largest-term monomial of f with respect to `order`.
template <std::size_t N>
const BasicTerm<N>& leading_term(const BasicPolynomial<N>& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading term");
  const BasicTerm<N>* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

/// Exact quotient f / g; throws DomainError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Embeds into the 5-variable ring (t-exponent zero) and back.
ElimPolynomial to_elim(const Polynomial& f);
/// Throws DomainError if t occurs.
Polynomial from_elim(const ElimPolynomial& f);

/// Parses the text grammar over x, y, z, w: integer or a/b coefficients,
/// + - * ^ and parentheses, whitespace insensitive.
Polynomial parse_polynomial(std::string_view text, Field field = Field::rationals());

/// Splits a comma- or newline-separated list and parses each entry.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, Field field = Field::rationals());

inline Polynomial poly(std::string_view text, Field field = Field::rationals()) {
  return parse_polynomial(text, field);
}

}  // namespace flatlim

#endif  // FLATLIM_POLYNOMIAL_HPP
