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

#include <gtest/gtest.h>

#include <random>

#include "flatlim/scalar.hpp"

namespace flatlim {
namespace {

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
  EXPECT_EQ(Rational::parse("4/-6").str(), "-2/3");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse("1/2/3"), ParseError);
}

TEST(Rational, Arithmetic) {
  Rational a = Rational::parse("1/2");
  Rational b = Rational::parse("1/3");
  EXPECT_EQ((a + b).str(), "5/6");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/6");
  EXPECT_EQ((a / b).str(), "3/2");
  EXPECT_THROW(Rational(0).inverse(), DomainError);
  EXPECT_TRUE(b < a);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(8, 4), 70);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Field, PrimeValidation) {
  EXPECT_EQ(Field::prime(7).characteristic(), 7U);
  EXPECT_EQ(Field::prime(32003).name(), "ZZ/32003");
  EXPECT_EQ(Field::rationals().name(), "QQ");
  EXPECT_THROW(Field::prime(1), DomainError);
  EXPECT_THROW(Field::prime(15), DomainError);
  EXPECT_THROW(Field::prime(std::uint64_t{1} << 31), DomainError);
}

TEST(Scalar, PrimeFieldReduction) {
  Field f7 = Field::prime(7);
  EXPECT_EQ(Scalar(-1L, f7).str(), "6");
  EXPECT_EQ(Scalar(Rational::parse("1/3"), f7).str(), "5");  // 3 * 5 = 15 = 1
  EXPECT_EQ((Scalar(3L, f7) * Scalar(5L, f7)).str(), "1");
  EXPECT_EQ(Scalar(3L, f7).inverse(), Scalar(5L, f7));
  EXPECT_THROW(Scalar(Rational::parse("1/7"), f7), DomainError);
  EXPECT_THROW(Scalar(0L, f7).inverse(), DomainError);
}

TEST(Scalar, MixedFieldsAreRejected) {
  EXPECT_THROW(Scalar(1L) + Scalar(1L, Field::prime(5)), DomainError);
  EXPECT_THROW(Scalar(1L, Field::prime(3)) * Scalar(1L, Field::prime(5)), DomainError);
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar(1L) / Scalar(0L), DomainError);
  EXPECT_THROW(Scalar(1L, Field::prime(11)) / Scalar(11L, Field::prime(11)), DomainError);
}

// Field axioms on random elements of Q and F_p.
class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldOnRandomElements) {
  Field field = GetParam() == 0 ? Field::rationals() : Field::prime(GetParam());
  std::mt19937_64 rng(GetParam() + 17);
  auto draw = [&] {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 50) + 1;
    if (!field.is_rational() && den % field.characteristic() == 0) den = 1;
    return Scalar(Rational(Integer(num), Integer(den)), field);
  };
  Scalar zero = Scalar::zero(field);
  Scalar one = Scalar::one(field);
  for (int i = 0; i < 300; ++i) {
    Scalar a = draw();
    Scalar b = draw();
    Scalar c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + (-a), zero);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), one);
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(QandFp, FieldAxioms, ::testing::Values(0U, 2U, 3U, 101U, 32003U, 2147483647U));

}  // namespace
}  // namespace flatlim
