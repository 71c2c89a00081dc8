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

#ifndef FLATLIM_HILBERT_HPP
#define FLATLIM_HILBERT_HPP

#include <string>
#include <vector>

#include "flatlim/ideal.hpp"
#include "flatlim/monomial.hpp"
#include "flatlim/scalar.hpp"

namespace flatlim {

/// h(t) with H_{R/I}(t) = h(t) / (1 - t)^4.
class HilbertSeriesNumerator {
 public:
  HilbertSeriesNumerator() = default;
  explicit HilbertSeriesNumerator(std::vector<Integer> coefficients);

  /// Coefficients of h, lowest degree first, without trailing zeros.
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  /// dim (R/I)_n, read off the series expansion.
  Integer dimension_in_degree(long n) const;

  /// Krull dimension of R/I; -1 for the unit ideal.
  int krull_dimension() const;

  std::string str() const;

  friend bool operator==(const HilbertSeriesNumerator& a, const HilbertSeriesNumerator& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

/// Hilbert polynomial of R/I for Krull dimension at most 2, stored in the
/// power basis. For curves p(n) = d*n + 1 - g.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  HilbertPolynomial(int krull_dimension, std::vector<Integer> coefficients);

  /// Krull dimension of R/I: 2 for curves, 1 for points, 0 for the
  /// irrelevant locus, -1 for the empty scheme.
  int krull_dimension() const { return krull_dim_; }
  /// Power-basis coefficients, constant term first.
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer evaluate(long n) const;

  /// Leading coefficient for curves, the constant for points, else 0.
  long degree() const;
  /// Arithmetic genus 1 - p(0); only defined for curves.
  long genus() const;

  /// E.g. "4n + 4", "n + 1", "6", "0".
  std::string str() const;

  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    return a.krull_dim_ == b.krull_dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int krull_dim_ = -1;
  std::vector<Integer> coeffs_;
};

/// Numerator of the Hilbert series of R/M for a monomial ideal M, by pivot
/// splitting with memoization and inclusion-exclusion for small generator
/// sets.
HilbertSeriesNumerator hilbert_series_monomial(const std::vector<Monomial>& generators);

/// Numerator for a homogeneous ideal, via the grevlex leading-term ideal.
HilbertSeriesNumerator hilbert_series(const Ideal& ideal);

long hilbert_function(const Ideal& ideal, long n);
std::vector<long> hilbert_function_values(const Ideal& ideal, long max_degree);

/// Throws DomainError when dim R/I exceeds 2.
HilbertPolynomial hilbert_polynomial(const HilbertSeriesNumerator& numerator);
HilbertPolynomial hilbert_polynomial(const Ideal& ideal);

/// Hilbert function of K[z,w]/(F,G) compared with the complete
/// intersection series (1 - t^deg F)(1 - t^deg G)/(1 - t)^2.
struct CompleteIntersectionCheck {
  std::vector<long> values;    // computed, degrees 0 .. deg F + deg G
  std::vector<long> expected;  // from the closed form
  long total_dimension = 0;
  bool matches = false;
};

/// Throws DomainError when gcd(F, G) is nonconstant.
CompleteIntersectionCheck ci_hilbert_check(const Polynomial& f, const Polynomial& g);

}  // namespace flatlim

#endif  // FLATLIM_HILBERT_HPP
