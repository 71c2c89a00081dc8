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

#include "flatlim/polynomial.hpp"
#include "flatlim/term_order.hpp"
#include "test_util.hpp"

namespace flatlim {
namespace {

using testing_util::random_form;
using testing_util::random_monomial;

TEST(Monomial, BasicOperations) {
  Monomial a({2, 1, 0, 0});
  Monomial b({1, 1, 1, 0});
  EXPECT_EQ(a.degree(), 3U);
  EXPECT_EQ(a.str(), "x^2*y");
  EXPECT_EQ(lcm(a, b).str(), "x^2*y*z");
  EXPECT_EQ(gcd(a, b).str(), "x*y");
  EXPECT_TRUE(Monomial({1, 1, 0, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ((a * b).str(), "x^3*y^2*z");
  EXPECT_EQ((a / Monomial::var(kX)).str(), "x*y");
  EXPECT_THROW(a / Monomial::var(kW), DomainError);
  EXPECT_TRUE(Monomial::var(kX).coprime(Monomial::var(kY)));
  EXPECT_EQ(Monomial().str(), "1");
}

TEST(Monomial, ExponentOverflowIsDetected) {
  Monomial big = Monomial::var(kX, 60000);
  EXPECT_THROW(big * big, DomainError);
}

TEST(Parse, Grammar) {
  EXPECT_EQ(poly("x^2 - 2/3*y*z + w").str(), "x^2 - 2/3*y*z + w");
  EXPECT_EQ(poly("(x+y)^2").str(), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(poly("-(x - y)").str(), "-x + y");
  EXPECT_EQ(poly("2*3*x").str(), "6*x");
  EXPECT_EQ(poly("x*(y+z) - x*y").str(), "x*z");
  EXPECT_EQ(poly("0").str(), "0");
  EXPECT_EQ(poly(" 1/2 ").str(), "1/2");
  EXPECT_EQ(poly("x-x").str(), "0");
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    poly("x + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(poly("x +"), ParseError);
  EXPECT_THROW(poly("(x + y"), ParseError);
  EXPECT_THROW(poly("x^"), ParseError);
  EXPECT_THROW(poly("x y"), ParseError);
  try {
    parse_polynomial_list("x, y, z +* w");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9U);
  }
}

TEST(Parse, ListSeparators) {
  auto list = parse_polynomial_list("x, y; z\n(w + x)*(w - x)");
  ASSERT_EQ(list.size(), 4U);
  EXPECT_EQ(list[3].str(), "-x^2 + w^2");
  EXPECT_TRUE(parse_polynomial_list("  ").empty());
}

TEST(Parse, RoundTripsThroughStr) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_form(rng, 1 + i % 5, 1 + i % 7, 30);
    f = f * Polynomial(Scalar(Rational(Integer(1), Integer(1 + i % 9))));
    EXPECT_EQ(poly(f.str()), f);
  }
}

TEST(Parse, PrimeField) {
  Field f5 = Field::prime(5);
  EXPECT_EQ(poly("7*x + 1/2", f5).str(), "2*x + 3");
  EXPECT_EQ(poly("5*x", f5).str(), "0");
}

TEST(Polynomial, Queries) {
  Polynomial f = poly("x^2*y - 3*z^3 + w^3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(poly("x + 1").is_homogeneous());
  EXPECT_EQ(f.degree_in(kX), 2);
  EXPECT_EQ(f.coefficient(Monomial::var(kZ, 3)), Scalar(-3L));
  EXPECT_TRUE(poly("z^2 - w*z").only_in({kZ, kW}));
  EXPECT_EQ(f.evaluate({Scalar(1L), Scalar(2L), Scalar(1L), Scalar(0L)}), Scalar(-1L));
  EXPECT_EQ(poly("x - y").pow(3), poly("x^3 - 3*x^2*y + 3*x*y^2 - y^3"));
}

TEST(Polynomial, RingAxiomsOnRandomForms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_form(rng, 2, 4);
    Polynomial b = random_form(rng, 2, 4);
    Polynomial c = random_form(rng, 1, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(divide_exact(a * c, c), a);
  }
}

TEST(Polynomial, ExactDivisionFailsWhenNotExact) {
  EXPECT_THROW(divide_exact(poly("x^2 + y"), poly("x")), DomainError);
  EXPECT_EQ(divide_exact(poly("x^2 - y^2"), poly("x + y")), poly("x - y"));
}

TEST(Polynomial, ElimConversion) {
  Polynomial f = poly("x*y - 2*z*w + 3");
  EXPECT_EQ(from_elim(to_elim(f)), f);
  ElimPolynomial t = ElimPolynomial::var(kT);
  EXPECT_THROW(from_elim(t * to_elim(f)), DomainError);
}

TEST(InitialForm, PicksTopWeight) {
  WeightVector omega = WeightVector::degeneration(4);
  EXPECT_EQ(omega.str(), "(4,2,1,1)");
  EXPECT_EQ(initial_form(poly("x^2 + x*w - y*z"), omega), poly("x^2"));
  EXPECT_EQ(initial_form(poly("y - z - w"), omega), poly("y"));
  EXPECT_EQ(initial_form(poly("z^2 + z*w + 5"), omega), poly("z^2 + z*w"));
  EXPECT_TRUE(is_weight_homogeneous(poly("x + y*z^2 + z^4"), omega));
  EXPECT_FALSE(is_weight_homogeneous(poly("x + y"), omega));
}

TEST(InitialForm, IsMultiplicative) {
  std::mt19937_64 rng(3);
  for (long d = 2; d <= 6; ++d) {
    WeightVector omega = WeightVector::degeneration(d);
    for (int i = 0; i < 40; ++i) {
      Polynomial f = random_form(rng, 2, 5);
      Polynomial g = random_form(rng, 3, 5);
      EXPECT_EQ(initial_form(f * g, omega), initial_form(f, omega) * initial_form(g, omega));
    }
  }
}

TEST(WeightVector, Validation) {
  EXPECT_THROW(WeightVector({0, 0, 0, 0}), DomainError);
  EXPECT_THROW(WeightVector({1, -1, 0, 0}), DomainError);
  EXPECT_THROW(WeightVector({}), DomainError);
}

// Term-order axioms: total, multiplicative, 1 is the minimum.
class TermOrderAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(TermOrderAxioms, Hold) {
  TermOrder order = TermOrder::parse(GetParam());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    Monomial a = random_monomial(rng, static_cast<int>(rng() % 6));
    Monomial b = random_monomial(rng, static_cast<int>(rng() % 6));
    Monomial c = random_monomial(rng, static_cast<int>(rng() % 6));
    Monomial m = random_monomial(rng, static_cast<int>(rng() % 4));
    int ab = order.compare(a, b);
    EXPECT_EQ(ab, -order.compare(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(order.compare(a * m, b * m), ab);
    if (ab < 0 && order.compare(b, c) < 0) {
      EXPECT_LT(order.compare(a, c), 0);
    }
    if (!a.is_one()) {
      EXPECT_GT(order.compare(a, Monomial()), 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, TermOrderAxioms,
                         ::testing::Values("lex", "grevlex", "weight(4,2,1,1)", "weight(5,2,1,1)", "weight(0,0,1,0)"));

TEST(TermOrder, KnownComparisons) {
  TermOrder grevlex = TermOrder::grevlex();
  TermOrder lex = TermOrder::lex();
  // x*w^2 vs y^3 ... grevlex: same degree, smallest variable w decides.
  EXPECT_LT(grevlex.compare(Monomial({1, 0, 0, 2}), Monomial({0, 3, 0, 0})), 0);
  EXPECT_GT(lex.compare(Monomial({1, 0, 0, 2}), Monomial({0, 3, 0, 0})), 0);
  EXPECT_GT(grevlex.compare(Monomial({0, 0, 2, 0}), Monomial({1, 0, 0, 0})), 0);
  TermOrder weight = TermOrder::weight_refined(WeightVector::degeneration(4));
  EXPECT_GT(weight.compare(Monomial({1, 0, 0, 0}), Monomial({0, 1, 1, 0})), 0);
  // Equal weight 4: the grevlex refinement puts y^2 above x.
  EXPECT_GT(weight.compare(Monomial({0, 2, 0, 0}), Monomial({1, 0, 0, 0})), 0);
  EXPECT_EQ(weight.name(), "weight(4,2,1,1)");
  EXPECT_THROW(TermOrder::parse("weight(1,2)"), DomainError);
  EXPECT_THROW(TermOrder::parse("revlex"), DomainError);
}

TEST(TermOrder, EliminationBlock) {
  TermOrder e = TermOrder::eliminate_aux();
  BasicMonomial<kElimVars> t = BasicMonomial<kElimVars>::var(kT);
  BasicMonomial<kElimVars> big = BasicMonomial<kElimVars>::var(kX, 9);
  EXPECT_GT(e.compare(t, big), 0);
  EXPECT_EQ(e.num_vars(), kElimVars);
}

}  // namespace
}  // namespace flatlim
