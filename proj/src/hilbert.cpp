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

#include "flatlim/hilbert.hpp"

#include <algorithm>
#include <map>

#include "flatlim/binary_form.hpp"

namespace flatlim {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(IntPoly& acc, const IntPoly& p, std::size_t shift, int sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sign > 0) {
      acc[i + shift] += p[i];
    } else {
      acc[i + shift] -= p[i];
    }
  }
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw DomainError("Hilbert function value exceeds machine range");
  return v.get_si();
}

using Key = std::vector<std::array<Monomial::Exponent, kNumVars>>;

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

class SeriesEngine {
 public:
  IntPoly numerator(const std::vector<Monomial>& raw) {
    std::vector<Monomial> gens = minimalize(raw);
    if (gens.empty()) return {1};
    if (gens.size() <= 6) return inclusion_exclusion(gens);
    Key key;
    for (const auto& g : gens) key.push_back(g.exponents());
    std::sort(key.begin(), key.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // Pivot on the variable occurring in the most generators that are not
    // pure powers.
    std::array<int, kNumVars> counts{};
    for (const auto& g : gens) {
      int support = 0;
      for (std::size_t v = 0; v < kNumVars; ++v) support += g.exponent(v) ? 1 : 0;
      if (support < 2) continue;
      for (std::size_t v = 0; v < kNumVars; ++v) counts[v] += g.exponent(v) ? 1 : 0;
    }
    std::size_t pivot = std::max_element(counts.begin(), counts.end()) - counts.begin();
    IntPoly result;
    if (counts[pivot] == 0) {
      // Pure powers of distinct variables: a complete intersection.
      result = {1};
      for (const auto& g : gens) {
        IntPoly factor(g.degree() + 1, 0);
        factor[0] = 1;
        factor[g.degree()] = -1;
        result = multiply(result, factor);
      }
    } else {
      Monomial p = Monomial::var(pivot);
      std::vector<Monomial> sum = gens;
      sum.push_back(p);
      std::vector<Monomial> quotient;
      for (const auto& g : gens) quotient.push_back(g.exponent(pivot) ? g / p : g);
      result = numerator(sum);
      add_shifted(result, numerator(quotient), 1, +1);
      trim(result);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
  }

  static IntPoly inclusion_exclusion(const std::vector<Monomial>& gens) {
    IntPoly acc;
    std::size_t n = gens.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Monomial l;
      int bits = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) {
          l = lcm(l, gens[i]);
          ++bits;
        }
      }
      add_shifted(acc, IntPoly{1}, l.degree(), bits % 2 == 0 ? +1 : -1);
    }
    trim(acc);
    return acc;
  }

  std::map<Key, IntPoly> memo_;
};

}  // namespace

HilbertSeriesNumerator::HilbertSeriesNumerator(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

Integer HilbertSeriesNumerator::dimension_in_degree(long n) const {
  Integer total = 0;
  for (std::size_t i = 0; i < coeffs_.size() && static_cast<long>(i) <= n; ++i) {
    total += coeffs_[i] * binomial(n - static_cast<long>(i) + 3, 3);
  }
  return total;
}

int HilbertSeriesNumerator::krull_dimension() const {
  if (coeffs_.empty()) return -1;
  IntPoly h = coeffs_;
  int factors = 0;
  while (factors < 4) {
    Integer at_one = 0;
    for (const auto& c : h) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 - t).
    IntPoly q(h.size() - 1, 0);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      running += h[i];
      q[i] = running;
    }
    h = q;
    trim(h);
    ++factors;
  }
  return 4 - factors;
}

std::string HilbertSeriesNumerator::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Integer c = coeffs_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

HilbertPolynomial::HilbertPolynomial(int krull_dimension, std::vector<Integer> coefficients)
    : krull_dim_(krull_dimension), coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

Integer HilbertPolynomial::evaluate(long n) const {
  Integer value = 0;
  Integer power = 1;
  for (const auto& c : coeffs_) {
    value += c * power;
    power *= n;
  }
  return value;
}

long HilbertPolynomial::degree() const {
  if (krull_dim_ == 2) return to_long(coeffs_.size() > 1 ? coeffs_[1] : Integer(0));
  if (krull_dim_ == 1) return to_long(coeffs_.empty() ? Integer(0) : coeffs_[0]);
  return 0;
}

long HilbertPolynomial::genus() const {
  if (krull_dim_ != 2) throw DomainError("arithmetic genus is only defined for curves");
  return 1 - to_long(coeffs_.empty() ? Integer(0) : coeffs_[0]);
}

std::string HilbertPolynomial::str() const {
  Integer c0 = coeffs_.empty() ? Integer(0) : coeffs_[0];
  Integer c1 = coeffs_.size() > 1 ? coeffs_[1] : Integer(0);
  if (c1 == 0) return c0.get_str();
  std::string out = c1 == 1 ? "n" : c1 == -1 ? "-n" : c1.get_str() + "n";
  if (c0 > 0) out += " + " + c0.get_str();
  if (c0 < 0) out += " - " + Integer(-c0).get_str();
  return out;
}

HilbertSeriesNumerator hilbert_series_monomial(const std::vector<Monomial>& generators) {
  SeriesEngine engine;
  return HilbertSeriesNumerator(engine.numerator(generators));
}

HilbertSeriesNumerator hilbert_series(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("Hilbert series needs a homogeneous ideal");
  return hilbert_series_monomial(ideal.groebner().leading_monomials());
}

long hilbert_function(const Ideal& ideal, long n) {
  if (n < 0) return 0;
  return to_long(hilbert_series(ideal).dimension_in_degree(n));
}

std::vector<long> hilbert_function_values(const Ideal& ideal, long max_degree) {
  HilbertSeriesNumerator h = hilbert_series(ideal);
  std::vector<long> out;
  for (long n = 0; n <= max_degree; ++n) out.push_back(to_long(h.dimension_in_degree(n)));
  return out;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeriesNumerator& numerator) {
  int dim = numerator.krull_dimension();
  if (dim > 2) {
    throw DomainError("Hilbert polynomial supported only for Krull dimension <= 2, got " + std::to_string(dim));
  }
  if (dim <= 0) return HilbertPolynomial(dim, {});
  // k(t) = h(t) / (1 - t)^(4 - dim)
  IntPoly k = numerator.coefficients();
  for (int f = 0; f < 4 - dim; ++f) {
    IntPoly q(k.size() - 1, 0);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      running += k[i];
      q[i] = running;
    }
    k = q;
  }
  Integer at_one = 0;
  Integer shifted = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    at_one += k[i];
    shifted += k[i] * (1 - static_cast<long>(i));
  }
  if (dim == 1) return HilbertPolynomial(1, {at_one});
  // sum_i k_i * C(n - i + 1, 1) = k(1) n + sum_i k_i (1 - i)
  return HilbertPolynomial(2, {shifted, at_one});
}

HilbertPolynomial hilbert_polynomial(const Ideal& ideal) { return hilbert_polynomial(hilbert_series(ideal)); }

CompleteIntersectionCheck ci_hilbert_check(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("complete intersection check needs nonzero forms");
  if (!binary_form_gcd(f, g).is_constant()) {
    throw DomainError("F and G share a common factor; not a complete intersection");
  }
  Field field = f.field();
  long a = f.degree();
  long b = g.degree();
  Ideal ideal({Polynomial::var(kX, field), Polynomial::var(kY, field), f, g}, field);
  CompleteIntersectionCheck check;
  check.values = hilbert_function_values(ideal, a + b);
  // (1 - t^a)(1 - t^b) / (1 - t)^2 = (1 + ... + t^(a-1))(1 + ... + t^(b-1))
  check.expected.assign(a + b + 1, 0);
  for (long i = 0; i < a; ++i) {
    for (long j = 0; j < b; ++j) ++check.expected[i + j];
  }
  for (long v : check.values) check.total_dimension += v;
  check.matches = check.values == check.expected && check.total_dimension == a * b;
  return check;
}

}  // namespace flatlim
