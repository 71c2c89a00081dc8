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

#include "flatlim/binary_form.hpp"
#include "flatlim/family.hpp"
#include "flatlim/hilbert.hpp"

namespace flatlim {
namespace {

PointSet points(std::initializer_list<long> values) {
  std::vector<Scalar> v;
  for (long a : values) v.emplace_back(a);
  return PointSet(v);
}

TEST(PointSet, Validation) {
  EXPECT_THROW(points({1}), DomainError);
  EXPECT_THROW(points({1, 2, 1}), DomainError);
  EXPECT_EQ(PointSet::parse("0, 1/2, -3").str(), "0,1/2,-3");
  EXPECT_THROW(PointSet::parse("0,1,x"), ParseError);
  // 5 = 0 in F_5.
  EXPECT_THROW(PointSet::parse("0,5", Field::prime(5)), DomainError);
}

TEST(Lines, Ideals) {
  EXPECT_TRUE(ideals_equal(line_ideal(Scalar(0L)), Ideal::parse("x, y")));
  EXPECT_TRUE(ideals_equal(line_ideal(Scalar(1L)), Ideal::parse("x - z, y - z - w")));
  Ideal l2 = line_ideal(Scalar(2L));
  EXPECT_TRUE(ideals_equal(l2, Ideal::parse("x - 2*z, y - 4*z - 2*w")));
  EXPECT_TRUE(l2.contains(quadric()));
  EXPECT_TRUE(line_ideal(Scalar(Rational::parse("-7/3"))).contains(quadric()));
}

TEST(Lines, DistinctSums) {
  EXPECT_FALSE(distinct_sums(points({0, 1, 2, 3})));
  EXPECT_TRUE(distinct_sums(points({0, 1, 3})));
  EXPECT_TRUE(distinct_sums(points({0, 1, 2, 4})));
  EXPECT_TRUE(distinct_sums(points({5, 9})));
}

TEST(Lines, CurveIdeal) {
  Ideal two = curve_ideal(points({0, 1}));
  EXPECT_EQ(hilbert_polynomial(two).str(), "2n + 2");
  PointSet pts = points({-2, 0, 3, 7});
  Ideal c = curve_ideal(pts);
  EXPECT_TRUE(c.contains(quadric()));
  Polynomial prod = poly("1");
  for (const auto& a : pts.values()) prod *= line_form_m(a);
  EXPECT_TRUE(c.contains(prod));
  EXPECT_EQ(hilbert_polynomial(c).str(), "4n + 4");
  // Order of the input does not matter.
  EXPECT_EQ(curve_ideal(points({7, 3, -2, 0})).groebner(), c.groebner());
}

TEST(Determinant, TwoLines) {
  PointSet pts = points({2, 5});
  DeterminantSplit s = det_A(pts);
  Polynomial expected = line_form_l(pts[0]) * line_form_m(pts[1]) - line_form_l(pts[1]) * line_form_m(pts[0]);
  EXPECT_EQ(s.a, expected);
  EXPECT_EQ(s.g, poly("-3*(7*z + w)"));
  EXPECT_EQ(s.a, poly("x") * s.g - poly("z") * s.b);
}

TEST(Determinant, ExampleExpansion) {
  PointSet pts = points({0, 1, 2, 3});
  DeterminantSplit s = det_A(pts);
  EXPECT_EQ(s.g, poly("12*(z+w)*(2*z+w)*(3*z+w)^2*(4*z+w)*(5*z+w)"));
  EXPECT_EQ(s.b, poly("12*y*(3*z+w)*(2*y^2*z^2 - 30*y*z^3 + 148*z^4 - 15*y*z^2*w + 195*z^3*w - y*z*w^2 + "
                      "85*z^2*w^2 + 15*z*w^3 + w^4)"));
  EXPECT_TRUE(curve_ideal(pts).contains(s.a));
  EXPECT_EQ(poly_P(pts), poly("24*z^2*(3*z+w)"));
  EXPECT_EQ(poly_F(pts), poly("24*z^3*(3*z+w)"));
}

TEST(Determinant, VandermondeProduct) {
  for (auto pts : {points({0, 1, 3}), points({-4, 1, 2, 9}), points({3, -1, 8, 2, 6})}) {
    EXPECT_EQ(det_A(pts).g, vandermonde_G(pts));
    long d = static_cast<long>(pts.d());
    EXPECT_EQ(vandermonde_G(pts).degree(), d * (d - 1) / 2);
    EXPECT_EQ(poly_F(pts).degree(), (d - 1) * (d - 2) / 2 + 1);
  }
}

TEST(FormP, DeterminantFormDiffersBySign) {
  for (auto pts : {points({0, 1, 3}), points({0, 1, 2, 4}), points({1, -2, 5, 7, 11}), points({0, 1, 3, 7, 12, 20})}) {
    long d = static_cast<long>(pts.d());
    long c = (d - 1) * (d - 2) / 2;
    Polynomial p = poly_P(pts);
    EXPECT_EQ(poly_P_determinant(pts), c % 2 ? -p : p) << pts.str();
  }
}

TEST(FormP, ClosedFormSmallCases) {
  ClosedFormCheck c3 = check_P_closed_form(points({0, 1, 3}));
  EXPECT_TRUE(c3.equal);
  EXPECT_EQ(c3.closed_form, Scalar(-6L));
  ClosedFormCheck c2 = check_P_closed_form(points({4, 9}));
  EXPECT_TRUE(c2.equal);
  EXPECT_EQ(c2.evaluated, Scalar(-5L));
}

TEST(FormP, DivisibilityAndCatalanCoefficient) {
  for (auto pts : {points({0, 1, 3}), points({0, 1, 2, 4}), points({1, -2, 5, 7, 11})}) {
    EXPECT_TRUE(check_P_divisible(pts));
    EXPECT_TRUE(check_P_catalan_coefficient(pts));
  }
}

TEST(Catalan, Values) {
  std::vector<long> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (long d = 2; d <= 10; ++d) EXPECT_EQ(catalan_c(d), expected[d - 2]) << d;
  EXPECT_THROW(catalan_c(1), DomainError);
  EXPECT_EQ(catalan_closed_form(20), Integer("477638700"));
}

TEST(Extremal, IdealAndGenus) {
  Ideal e = extremal_ideal(3, poly("z^2"), poly("z^3 - w^3"));
  HilbertPolynomial hp = hilbert_polynomial(e);
  EXPECT_EQ(hp.str(), "3n + 3");
  EXPECT_EQ(hp.genus(), extremal_genus(3, 2));
  EXPECT_EQ(extremal_genus(3, 2), -2);
  EXPECT_THROW(extremal_ideal(3, poly("z"), poly("z*w^2")), DomainError);
  EXPECT_THROW(extremal_ideal(3, poly("z^2"), poly("w^2")), DomainError);
  EXPECT_THROW(extremal_ideal(3, poly("x"), poly("w^3")), DomainError);
}

TEST(Extremal, GenusFormulaAcrossDegrees) {
  for (long d = 3; d <= 6; ++d) {
    for (long a = 1; a <= 3; ++a) {
      Polynomial f = poly("z").pow(static_cast<unsigned>(a));
      Polynomial g = poly("w").pow(static_cast<unsigned>(a + d - 2));
      HilbertPolynomial hp = hilbert_polynomial(extremal_ideal(d, f, g));
      EXPECT_EQ(hp.degree(), d);
      EXPECT_EQ(hp.genus(), extremal_genus(d, a));
    }
  }
}

TEST(InitialForm, OfDeterminant) {
  EXPECT_TRUE(check_in_A(points({0, 1, 3})));
  EXPECT_TRUE(check_in_A(points({0, 1, 2, 3})));
  EXPECT_TRUE(check_in_A(points({2, -3, 5, 11, 17})));
}

TEST(Random, DeterministicAndConditioned) {
  PointSet a = random_points(5, 42, 10);
  PointSet b = random_points(5, 42, 10);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(distinct_sums(a));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PointSet c = random_points(4, seed, 6, Field::rationals(), SumCondition::kColliding);
    EXPECT_FALSE(distinct_sums(c));
    for (const auto& v : c.values()) EXPECT_LE(v.to_rational(), Rational(6));
  }
  PointSet r = random_rational_points(4, 3, 9);
  EXPECT_TRUE(distinct_sums(r));
  EXPECT_THROW(random_points(6, 1, 2), DomainError);
}

// gcd(F, G) is constant exactly for distinct sums, and the zeros of G are
// the points [1 : -a_i - a_j].
TEST(Random, DistinctSumsIffCoprime) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (auto cond : {SumCondition::kDistinct, SumCondition::kColliding}) {
      PointSet pts = random_points(4 + seed % 2, seed, 7, Field::rationals(), cond);
      bool coprime = binary_form_gcd(poly_F(pts), vandermonde_G(pts)).is_constant();
      EXPECT_EQ(coprime, cond == SumCondition::kDistinct) << pts.str();
      Polynomial g = vandermonde_G(pts);
      for (std::size_t i = 0; i < pts.d(); ++i) {
        for (std::size_t j = i + 1; j < pts.d(); ++j) {
          Scalar w = -(pts[i] + pts[j]);
          EXPECT_TRUE(g.evaluate({Scalar(0L), Scalar(0L), Scalar(1L), w}).is_zero());
        }
      }
    }
  }
}

TEST(PrimitiveForm, Normalization) {
  EXPECT_EQ(primitive_form(poly("z + 1/3*w")), poly("3*z + w"));
  EXPECT_EQ(primitive_form(poly("-4*z + 6*w")), poly("2*z - 3*w"));
  Field f7 = Field::prime(7);
  EXPECT_EQ(primitive_form(poly("3*z + w", f7)), poly("z + 5*w", f7));
}

}  // namespace
}  // namespace flatlim
