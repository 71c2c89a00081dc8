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

#ifndef FLATLIM_SCALAR_HPP
#define FLATLIM_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "flatlim/error.hpp"

namespace flatlim {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer int_gcd(const Integer& a, const Integer& b);

Integer parse_integer(std::string_view text);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);

  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

/// Ground field descriptor: the rationals (modulus 0) or F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t characteristic() const { return modulus_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  constexpr explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An element of a Field. Rational elements are kept in canonical form,
/// prime-field elements as residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, Field field = Field::rationals());  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value, Field field = Field::rationals());  // NOLINT(google-explicit-constructor)

  static Scalar zero(Field field) { return Scalar(0L, field); }
  static Scalar one(Field field) { return Scalar(1L, field); }
  static Scalar parse(std::string_view text, Field field = Field::rationals());

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Rational: sign of the value. Prime field: 0 for zero, else 1.
  int sign() const;

  /// Rational value; for F_p the residue in [0, p).
  Rational to_rational() const;
  std::uint32_t residue() const { return residue_; }
  /// Only meaningful for rational scalars.
  bool is_integer() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  const mpq_class& raw_rational() const { return value_; }

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class value_;
};

}  // namespace flatlim

#endif  // FLATLIM_SCALAR_HPP
