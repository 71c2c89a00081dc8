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

#ifndef FLATLIM_TESTS_TEST_UTIL_HPP
#define FLATLIM_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "flatlim/polynomial.hpp"
#include "oracles/span_oracle.hpp"

namespace testing_util {

using flatlim::Field;
using flatlim::Monomial;
using flatlim::Polynomial;
using flatlim::Scalar;

inline oracle::Sparse to_sparse(const Polynomial& f) {
  oracle::Sparse out;
  for (const auto& t : f.terms()) {
    oracle::Exps e{};
    for (std::size_t i = 0; i < 4; ++i) e[i] = static_cast<int>(t.mono.exponent(i));
    out[e] = t.coeff.to_rational().raw();
  }
  return out;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Monomial random_monomial(std::mt19937_64& rng, int degree) {
  std::array<unsigned, 4> e{};
  for (int k = 0; k < degree; ++k) ++e[rng() % 4];
  return Monomial(e);
}

/// Homogeneous polynomial of the given degree with up to `terms` terms and
/// coefficients in [-bound, bound].
inline Polynomial random_form(std::mt19937_64& rng, int degree, int terms, long bound = 5,
                              Field field = Field::rationals()) {
  Polynomial f(field);
  for (int i = 0; i < terms; ++i) {
    long c = uniform(rng, -bound, bound);
    if (c == 0) c = 1;
    f += Polynomial(Scalar(c, field), random_monomial(rng, degree));
  }
  if (f.is_zero()) f = Polynomial(Scalar::one(field), random_monomial(rng, degree));
  return f;
}

}  // namespace testing_util

#endif  // FLATLIM_TESTS_TEST_UTIL_HPP
