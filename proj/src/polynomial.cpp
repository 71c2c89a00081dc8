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

#include "flatlim/polynomial.hpp"

#include <cctype>

namespace flatlim {

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = g.leading_term();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.mono.divides(t.mono)) throw DomainError("polynomial division is not exact");
    Term q{t.coeff / lead.coeff, t.mono / lead.mono};
    rest -= g.mul_term(q.coeff, q.mono);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_sorted_terms(std::move(quotient), f.field());
}

ElimPolynomial to_elim(const Polynomial& f) {
  std::vector<ElimPolynomial::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::array<unsigned, kElimVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = t.mono.exponent(i);
    out.push_back({t.coeff, BasicMonomial<kElimVars>(e)});
  }
  // grevlex order is preserved when the new last variable has exponent 0.
  return ElimPolynomial::from_sorted_terms(std::move(out), f.field());
}

Polynomial from_elim(const ElimPolynomial& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono.exponent(kT) != 0) throw DomainError("polynomial still involves the auxiliary variable");
    std::array<unsigned, kNumVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) e[i] = t.mono.exponent(i);
    out.push_back({t.coeff, Monomial(e)});
  }
  return Polynomial::from_sorted_terms(std::move(out), f.field());
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field) : text_(text), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(field_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (accept('+')) {
      } else if (!first) {
        return acc;
      }
      Polynomial t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits(), 10);
      Integer den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string digits = read_digits();
        if (digits.empty()) fail("'/' must be followed by an integer denominator");
        den = Integer(digits, 10);
        if (den == 0) fail("zero denominator");
      }
      return Polynomial(Scalar(Rational(num, den), field_));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (kVarNames[i] == c) {
          ++pos_;
          if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            fail("unknown variable '" + std::string(text_.substr(pos_ - 1, 2)) + "'");
          }
          return Polynomial::var(i, field_);
        }
      }
      fail("unknown variable '" + std::string(1, c) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Field field) { return Parser(text, field).parse(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, Field field) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == '\n' || c == ';') && depth == 0) {
      std::string_view item = text.substr(start, i - start);
      bool blank = item.find_first_not_of(" \t\r") == std::string_view::npos;
      if (!blank) {
        try {
          out.push_back(parse_polynomial(item, field));
        } catch (const ParseError& e) {
          throw ParseError(e.detail(), start + e.position());
        }
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace flatlim
