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

#include "flatlim/binary_form.hpp"

#include <algorithm>

namespace flatlim {

namespace {

// Dense univariate polynomial in z, lowest degree first, no trailing zeros.
using Univariate = std::vector<Scalar>;

void trim(Univariate& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Univariate dehomogenize(const Polynomial& f) {
  Univariate out;
  for (const auto& t : f.terms()) {
    std::size_t e = t.mono.exponent(kZ);
    if (out.size() <= e) out.resize(e + 1, Scalar::zero(f.field()));
    out[e] += t.coeff;
  }
  trim(out);
  return out;
}

Univariate remainder(Univariate a, const Univariate& b) {
  Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Scalar q = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

unsigned w_order(const Polynomial& f) {
  unsigned k = ~0U;
  for (const auto& t : f.terms()) k = std::min(k, t.mono.exponent(kW));
  return k;
}

}  // namespace

bool is_binary_form(const Polynomial& f) { return f.only_in({kZ, kW}) && f.is_homogeneous(); }

Polynomial binary_form_gcd(const Polynomial& f, const Polynomial& g) {
  if (!is_binary_form(f) || !is_binary_form(g)) throw DomainError("gcd expects binary forms in z and w");
  Field field = f.is_zero() ? g.field() : f.field();
  if (f.is_zero() && g.is_zero()) return Polynomial(field);
  if (f.is_zero() || g.is_zero()) {
    const Polynomial& h = f.is_zero() ? g : f;
    return h.leading_term().coeff.inverse() * h;
  }
  unsigned k = std::min(w_order(f), w_order(g));
  Univariate a = dehomogenize(f);
  Univariate b = dehomogenize(g);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  Scalar inv = a.back().inverse();
  std::size_t deg = a.size() - 1;
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    terms.push_back({a[i] * inv, Monomial({0, 0, static_cast<unsigned>(i), static_cast<unsigned>(deg - i + k)})});
  }
  return Polynomial::from_terms(std::move(terms), field);
}

}  // namespace flatlim
