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

#include "flatlim/binary_form.hpp"
#include "flatlim/hilbert.hpp"
#include "test_util.hpp"

namespace flatlim {
namespace {

TEST(HilbertSeries, PolynomialRing) {
  HilbertSeriesNumerator h = hilbert_series_monomial({});
  EXPECT_EQ(h.str(), "1");
  EXPECT_EQ(h.krull_dimension(), 4);
  EXPECT_EQ(h.dimension_in_degree(2), 10);
}

TEST(HilbertSeries, Line) {
  Ideal line = Ideal::parse("x, y");
  EXPECT_EQ(hilbert_series(line).str(), "1 - 2*t + t^2");
  HilbertPolynomial hp = hilbert_polynomial(line);
  EXPECT_EQ(hp.str(), "n + 1");
  EXPECT_EQ(hp.degree(), 1);
  EXPECT_EQ(hp.genus(), 0);
}

TEST(HilbertSeries, TwistedCubicAndPlaneCurve) {
  HilbertPolynomial cubic = hilbert_polynomial(Ideal::parse("x*z - y^2, y*w - z^2, x*w - y*z"));
  EXPECT_EQ(cubic.str(), "3n + 1");
  EXPECT_EQ(cubic.genus(), 0);
  HilbertPolynomial plane_quartic = hilbert_polynomial(Ideal::parse("x, y^4 + z^4 + w^4"));
  EXPECT_EQ(plane_quartic.genus(), 3);
}

TEST(HilbertSeries, PointsAndEmpty) {
  HilbertPolynomial two_points = hilbert_polynomial(Ideal::parse("x, y, z*w"));
  EXPECT_EQ(two_points.krull_dimension(), 1);
  EXPECT_EQ(two_points.str(), "2");
  HilbertPolynomial empty = hilbert_polynomial(Ideal::parse("x, y, z, w^3"));
  EXPECT_EQ(empty.krull_dimension(), 0);
  EXPECT_EQ(hilbert_series(Ideal::unit()).krull_dimension(), -1);
}

TEST(HilbertSeries, SurfacesAreRejected) {
  EXPECT_THROW(hilbert_polynomial(Ideal::parse("x")), DomainError);
  EXPECT_THROW(hilbert_series(Ideal::parse("x + 1")), DomainError);
}

TEST(HilbertSeries, TwoSkewLines) {
  Ideal two = intersect(Ideal::parse("x, y"), Ideal::parse("z, w"));
  EXPECT_EQ(hilbert_polynomial(two).str(), "2n + 2");
  EXPECT_EQ(hilbert_function(two, 1), 4);
  EXPECT_EQ(hilbert_function(two, -1), 0);
}

// Brute-force comparison on random monomial ideals.
TEST(HilbertSeries, MatchesMonomialCounting) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 150; ++round) {
    std::vector<Monomial> gens;
    std::vector<oracle::Exps> exps;
    int count = 1 + static_cast<int>(rng() % 9);
    for (int k = 0; k < count; ++k) {
      Monomial m = testing_util::random_monomial(rng, 1 + static_cast<int>(rng() % 4));
      gens.push_back(m);
      exps.push_back({int(m.exponent(0)), int(m.exponent(1)), int(m.exponent(2)), int(m.exponent(3))});
    }
    HilbertSeriesNumerator h = hilbert_series_monomial(gens);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_EQ(h.dimension_in_degree(n), oracle::count_standard_monomials(exps, n)) << "round " << round;
    }
  }
}

TEST(CompleteIntersection, CoprimeForms) {
  CompleteIntersectionCheck ci = ci_hilbert_check(poly("z^2"), poly("z^3 - w^3"));
  EXPECT_TRUE(ci.matches);
  EXPECT_EQ(ci.total_dimension, 6);
  EXPECT_EQ(ci.values, (std::vector<long>{1, 2, 2, 1, 0, 0}));
  EXPECT_THROW(ci_hilbert_check(poly("z*w"), poly("z^2")), DomainError);
}

TEST(BinaryForm, Gcd) {
  EXPECT_EQ(binary_form_gcd(poly("z^2 - w^2"), poly("z^2 + 2*z*w + w^2")), poly("z + w"));
  EXPECT_EQ(binary_form_gcd(poly("z*w^2"), poly("w^3 + z*w^2")), poly("w^2"));
  EXPECT_EQ(binary_form_gcd(poly("3*z^4"), poly("6*z^2*w")), poly("z^2"));
  EXPECT_TRUE(binary_form_gcd(poly("z^2"), poly("w^2 + z*w")).is_constant());
  EXPECT_EQ(binary_form_gcd(poly("72*z^4 + 24*z^3*w"), poly("3*z^2 + 4*z*w + w^2")), poly("z + 1/3*w"));
  EXPECT_THROW(binary_form_gcd(poly("x"), poly("z")), DomainError);
}

TEST(BinaryForm, GcdDividesBothOnRandomInputs) {
  std::mt19937_64 rng(8);
  auto form = [&](int degree) {
    Polynomial f;
    for (int i = 0; i <= degree; ++i) {
      long c = testing_util::uniform(rng, -4, 4);
      f += Polynomial(Scalar(c), Monomial({0, 0, unsigned(degree - i), unsigned(i)}));
    }
    return f.is_zero() ? poly("z").pow(unsigned(degree)) : f;
  };
  for (int i = 0; i < 100; ++i) {
    Polynomial common = form(1 + i % 2);
    Polynomial f = form(1 + i % 3) * common;
    Polynomial g = form(2) * common;
    Polynomial d = binary_form_gcd(f, g);
    EXPECT_NO_THROW(divide_exact(f, d));
    EXPECT_NO_THROW(divide_exact(g, d));
    EXPECT_NO_THROW(divide_exact(d, common));
  }
}

}  // namespace
}  // namespace flatlim
