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

#include "flatlim/family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <random>

#include "flatlim/binary_form.hpp"

namespace flatlim {

namespace {

Polynomial constant(const Scalar& c) { return Polynomial(c); }

Polynomial var(std::size_t v, Field field) { return Polynomial::var(v, field); }

// Determinants of the (n-1)x(n-1) submatrices obtained by deleting row j,
// for every j, of the n x (n-1) matrix with columns `columns[c][row]`.
// Dynamic programming over row subsets: D[S] is the determinant of the rows
// in S (ascending) against the first |S| columns, expanded along the last
// of those columns.
std::vector<Polynomial> row_deleted_minors(const std::vector<std::vector<Polynomial>>& columns, std::size_t n,
                                           Field field) {
  std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Polynomial> det(full + 1, Polynomial(field));
  det[0] = constant(Scalar::one(field));
  std::vector<std::size_t> by_size(full + 1);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::size_t s : by_size) {
    std::size_t k = __builtin_popcountll(s);
    if (k == 0 || k > n - 1) continue;
    const auto& col = columns[k - 1];
    Polynomial acc(field);
    std::size_t position = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s & (std::size_t{1} << i))) continue;
      ++position;
      std::size_t rest = s & ~(std::size_t{1} << i);
      Polynomial term = col[i] * det[rest];
      // sign (-1)^(position + k), both 1-based
      if ((position + k) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    det[s] = std::move(acc);
  }
  std::vector<Polynomial> minors;
  for (std::size_t j = 0; j < n; ++j) minors.push_back(det[full & ~(std::size_t{1} << j)]);
  return minors;
}

// sum_j (-1)^j first[j] * minors[j], j 0-based.
Polynomial first_column_expansion(const std::vector<Polynomial>& first, const std::vector<Polynomial>& minors,
                                  Field field) {
  Polynomial acc(field);
  for (std::size_t j = 0; j < minors.size(); ++j) {
    if (j % 2 == 0) {
      acc += first[j] * minors[j];
    } else {
      acc -= first[j] * minors[j];
    }
  }
  return acc;
}

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::vector<Scalar> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw DomainError("need at least two points");
  for (const auto& v : values_) {
    if (!(v.field() == values_.front().field())) throw DomainError("points over different fields");
  }
  if (!pairwise_distinct(values_)) throw DomainError("points must be pairwise distinct");
}

PointSet PointSet::parse(std::string_view text, Field field) {
  std::vector<Scalar> values;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string item(text.substr(start, i - start));
      item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return std::isspace(c); }), item.end());
      try {
        values.push_back(Scalar::parse(item, field));
      } catch (const ParseError& e) {
        throw ParseError("bad point '" + item + "': " + e.detail(), start + e.position());
      }
      start = i + 1;
    }
  }
  return PointSet(std::move(values));
}

bool PointSet::pairwise_distinct(const std::vector<Scalar>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return false;
    }
  }
  return true;
}

std::string PointSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].str();
  }
  return out;
}

PointSet random_points(std::size_t d, std::uint64_t seed, long bound, Field field, SumCondition condition) {
  if (d < 2) throw DomainError("need at least two points");
  if (bound < 1) throw DomainError("random bound must be positive");
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<long>(rng() % span) - bound;
  };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < d; ++i) values.emplace_back(draw(), field);
    if (!PointSet::pairwise_distinct(values)) continue;
    bool distinct = distinct_sums(values);
    if ((condition == SumCondition::kDistinct) == distinct) return PointSet(std::move(values));
  }
  throw DomainError("no admissible point set found; increase the bound");
}

PointSet random_rational_points(std::size_t d, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  auto draw = [&](long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return static_cast<long>(rng() % span) + lo;
  };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < d; ++i) values.emplace_back(Rational(draw(-bound, bound), draw(1, bound)));
    if (PointSet::pairwise_distinct(values) && distinct_sums(values)) return PointSet(std::move(values));
  }
  throw DomainError("no admissible rational point set found; increase the bound");
}

// ---------------------------------------------------------------- lines

Polynomial quadric(Field field) {
  Polynomial x = var(kX, field);
  Polynomial y = var(kY, field);
  Polynomial z = var(kZ, field);
  Polynomial w = var(kW, field);
  return x * (x + w) - y * z;
}

Polynomial line_form_l(const Scalar& a) { return var(kX, a.field()) - a * var(kZ, a.field()); }

Polynomial line_form_m(const Scalar& a) {
  Field f = a.field();
  return var(kY, f) - a * (a * var(kZ, f) + var(kW, f));
}

Ideal line_ideal(const Scalar& a) { return Ideal({line_form_l(a), line_form_m(a)}, a.field()); }

bool distinct_sums(const std::vector<Scalar>& values) {
  std::vector<Scalar> sums;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) sums.push_back(values[i] + values[j]);
  }
  for (std::size_t i = 0; i < sums.size(); ++i) {
    for (std::size_t j = i + 1; j < sums.size(); ++j) {
      if (sums[i] == sums[j]) return false;
    }
  }
  return true;
}

Ideal curve_ideal(const PointSet& points) {
  std::vector<Scalar> sorted = points.values();
  std::sort(sorted.begin(), sorted.end(),
            [](const Scalar& a, const Scalar& b) { return a.to_rational() < b.to_rational(); });
  std::vector<Ideal> lines;
  for (const auto& a : sorted) lines.push_back(line_ideal(a));
  return intersect(lines);
}

// ---------------------------------------------------------------- determinant

DeterminantSplit det_A(const PointSet& points) {
  Field field = points.field();
  std::size_t d = points.d();
  std::vector<Polynomial> m;
  std::vector<Polynomial> l;
  std::vector<Polynomial> ones;
  std::vector<Polynomial> as;
  for (const auto& a : points.values()) {
    m.push_back(line_form_m(a));
    l.push_back(line_form_l(a));
    ones.push_back(constant(Scalar::one(field)));
    as.push_back(constant(a));
  }
  // columns m, m^2, ..., m^{d-1}
  std::vector<std::vector<Polynomial>> columns(d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial power = m[i];
    for (std::size_t c = 0; c + 1 < d; ++c) {
      columns[c].push_back(power);
      power *= m[i];
    }
  }
  std::vector<Polynomial> minors = row_deleted_minors(columns, d, field);
  DeterminantSplit split;
  split.a = first_column_expansion(l, minors, field);
  split.g = first_column_expansion(ones, minors, field);
  split.b = first_column_expansion(as, minors, field);
  if (split.a != var(kX, field) * split.g - var(kZ, field) * split.b) {
    throw Error("determinant split A = xG - zB failed");
  }
  return split;
}

Polynomial vandermonde_G(const PointSet& points) {
  Field field = points.field();
  Polynomial g = constant(Scalar::one(field));
  for (std::size_t i = 0; i < points.d(); ++i) {
    for (std::size_t j = i + 1; j < points.d(); ++j) {
      const Scalar& ai = points[i];
      const Scalar& aj = points[j];
      g *= (ai - aj) * ((ai + aj) * var(kZ, field) + var(kW, field));
    }
  }
  return g;
}

Scalar vandermonde(const PointSet& points) {
  Scalar v = Scalar::one(points.field());
  for (std::size_t i = 0; i < points.d(); ++i) {
    for (std::size_t j = i + 1; j < points.d(); ++j) v *= points[j] - points[i];
  }
  return v;
}

Polynomial poly_P(const PointSet& points) {
  Field field = points.field();
  std::size_t d = points.d();
  Polynomial z = var(kZ, field);
  Polynomial w = var(kW, field);
  Polynomial p(field);
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial prod = constant(points[j]);
    for (std::size_t h = 0; h < d; ++h) {
      for (std::size_t k = h + 1; k < d; ++k) {
        if (h == j || k == j) continue;
        prod *= (points[h] - points[k]) * ((points[h] + points[k]) * z + w);
      }
    }
    if (j % 2 == 0) {
      p += prod;
    } else {
      p -= prod;
    }
  }
  return p;
}

Polynomial poly_P_determinant(const PointSet& points) {
  Field field = points.field();
  std::size_t d = points.d();
  std::vector<Polynomial> p;
  std::vector<Polynomial> as;
  for (const auto& a : points.values()) {
    p.push_back(a * a * var(kZ, field) + a * var(kW, field));
    as.push_back(constant(a));
  }
  // columns 1, p, ..., p^{d-2}
  std::vector<std::vector<Polynomial>> columns(d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    Polynomial power = constant(Scalar::one(field));
    for (std::size_t c = 0; c + 1 < d; ++c) {
      columns[c].push_back(power);
      power *= p[i];
    }
  }
  return first_column_expansion(as, row_deleted_minors(columns, d, field), field);
}

ClosedFormCheck check_P_closed_form(const PointSet& points) {
  Field field = points.field();
  const auto& a = points.values();
  std::size_t d = points.d();
  ClosedFormCheck check;
  std::array<Scalar, kNumVars> at{Scalar::zero(field), Scalar::zero(field), Scalar::one(field), -(a[0] + a[1])};
  check.evaluated = poly_P_determinant(points).evaluate(at);
  Scalar rhs = a[0] - a[1];
  for (std::size_t j = 2; j < d; ++j) rhs *= (a[j] - a[0]) * (a[j] - a[1]);
  for (std::size_t h = 2; h < d; ++h) {
    for (std::size_t k = h + 1; k < d; ++k) rhs *= (a[k] - a[h]) * (a[h] + a[k] - a[0] - a[1]);
  }
  check.closed_form = rhs;
  check.equal = check.evaluated == check.closed_form;
  return check;
}

bool check_P_divisible(const PointSet& points) {
  auto need = static_cast<unsigned>(points.d() - 2);
  Polynomial p = poly_P(points);
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(kZ) < need) return false;
  }
  return true;
}

bool check_P_catalan_coefficient(const PointSet& points) {
  long d = static_cast<long>(points.d());
  Monomial target({0, 0, static_cast<unsigned>(d - 2), static_cast<unsigned>(choose2(d - 2))});
  Scalar coeff = poly_P_determinant(points).coefficient(target);
  Scalar c(Rational(catalan_c(d)), points.field());
  return coeff == -(c * vandermonde(points));
}

Integer catalan_closed_form(long d) {
  if (d < 2) throw DomainError("Catalan constant needs d >= 2");
  return binomial(2 * d - 4, d - 2) / (d - 1);
}

Integer catalan_c(long d) {
  if (d < 2) throw DomainError("Catalan constant needs d >= 2");
  std::vector<Integer> c(d + 1, 0);
  c[2] = 1;
  for (long n = 3; n <= d; ++n) {
    Integer acc = 0;
    for (long k = 1; k <= n - 2; ++k) {
      Integer term = binomial(n - 1 - k, k) * c[n - k];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    c[n] = acc;
  }
  if (c[d] != catalan_closed_form(d)) throw Error("Catalan recurrence disagrees with the closed form");
  return c[d];
}

// ---------------------------------------------------------------- extremal curves

long extremal_genus(long d, long deg_f) { return choose2(d - 2) - deg_f; }

Ideal extremal_ideal(long d, const Polynomial& f, const Polynomial& g) {
  if (d < 2) throw DomainError("extremal ideal needs d >= 2");
  if (f.is_zero() || g.is_zero()) throw DomainError("F and G must be nonzero");
  if (!is_binary_form(f) || !is_binary_form(g)) throw DomainError("F and G must be binary forms in z, w");
  if (g.degree() - f.degree() != d - 2) throw DomainError("deg G - deg F must equal d - 2");
  if (!binary_form_gcd(f, g).is_constant()) throw DomainError("F and G have a common zero");
  Field field = f.field();
  Polynomial x = var(kX, field);
  Polynomial y = var(kY, field);
  auto du = static_cast<unsigned>(d);
  return Ideal({x * x, x * y, y.pow(du), x * g - y.pow(du - 1) * f}, field);
}

bool check_in_A(const PointSet& points, const DeterminantSplit& split, const Polynomial& p) {
  Field field = points.field();
  auto d = static_cast<long>(points.d());
  Polynomial expected = var(kX, field) * split.g -
                        var(kY, field).pow(static_cast<unsigned>(d - 1)) * var(kZ, field) * p;
  return initial_form(split.a, WeightVector::degeneration(d)) == expected;
}

bool check_in_A(const PointSet& points) { return check_in_A(points, det_A(points), poly_P(points)); }

Polynomial primitive_form(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.field().is_rational()) return f.leading_term().coeff.inverse() * f;
  Integer den = 1;
  for (const auto& t : f.terms()) {
    Integer dd = t.coeff.raw_rational().get_den();
    den = den / int_gcd(den, dd) * dd;
  }
  Integer content = 0;
  for (const auto& t : f.terms()) {
    Integer scaled = t.coeff.raw_rational().get_num() * (den / t.coeff.raw_rational().get_den());
    content = int_gcd(content, scaled);
  }
  if (f.leading_term().coeff.sign() < 0) content = -content;
  return Scalar(Rational(den, content)) * f;
}

}  // namespace flatlim
