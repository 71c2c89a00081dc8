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

#include "flatlim/scalar.hpp"

#include <cctype>

namespace flatlim {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(p).get_mpz_t());
  Integer r = (num * inv) % p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) throw ParseError("unexpected character", j);
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den;
  try {
    den = parse_integer(text.substr(slash + 1));
  } catch (const ParseError& e) {
    throw ParseError("malformed denominator", slash + 1 + e.position());
  }
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
    throw DomainError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return is_rational() ? "QQ" : "ZZ/" + std::to_string(modulus_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(long value, Field field) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
  } else {
    long p = field.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const Rational& value, Field field) : field_(field) {
  if (field.is_rational()) {
    value_ = value.raw();
  } else {
    residue_ = reduce_mod(value.raw(), field.characteristic());
  }
}

Scalar Scalar::parse(std::string_view text, Field field) { return Scalar(Rational::parse(text), field); }

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(value_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? value_ == 1 : residue_ == 1; }

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(value_);
  return residue_ == 0 ? 0 : 1;
}

Rational Scalar::to_rational() const {
  if (field_.is_rational()) return Rational(value_.get_num(), value_.get_den());
  return Rational(static_cast<long>(residue_));
}

bool Scalar::is_integer() const { return !field_.is_rational() || value_.get_den() == 1; }

std::string Scalar::str() const {
  return field_.is_rational() ? value_.get_str(10) : std::to_string(residue_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw DomainError("mixed-field operands: " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = -value_;
  } else {
    r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
  } else {
    std::uint32_t p = field_.characteristic();
    r.residue_ = pow_mod(residue_, p - 2, p);
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  Scalar r;
  r.field_ = a.field_;
  if (a.field_.is_rational()) {
    r.value_ = a.value_ + b.value_;
  } else {
    std::uint64_t s = std::uint64_t{a.residue_} + b.residue_;
    r.residue_ = static_cast<std::uint32_t>(s % a.field_.characteristic());
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  Scalar r;
  r.field_ = a.field_;
  if (a.field_.is_rational()) {
    r.value_ = a.value_ * b.value_;
  } else {
    std::uint64_t s = std::uint64_t{a.residue_} * b.residue_;
    r.residue_ = static_cast<std::uint32_t>(s % a.field_.characteristic());
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

}  // namespace flatlim
