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

#ifndef FLATLIM_IDEAL_HPP
#define FLATLIM_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "flatlim/groebner.hpp"
#include "flatlim/polynomial.hpp"

namespace flatlim {

/// Ideal of K[x,y,z,w] given by generators. Reduced Groebner bases are
/// computed on demand and cached per term order; copies share the cache,
/// which is safe for concurrent use.
class Ideal {
 public:
  explicit Ideal(Field field = Field::rationals());
  Ideal(std::vector<Polynomial> generators, Field field = Field::rationals());
  Ideal(std::initializer_list<Polynomial> generators);

  static Ideal unit(Field field = Field::rationals());
  static Ideal parse(std::string_view text, Field field = Field::rationals());

  Field field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  bool is_monomial() const;

  /// Reduced Groebner basis under `order` (grevlex by default).
  const GBasis<kNumVars>& groebner(const TermOrder& order = TermOrder::grevlex()) const;
  bool has_cached(const TermOrder& order) const;
  /// Installs a basis known to be the reduced basis of this ideal.
  void seed(GBasis<kNumVars> basis) const;

  /// Membership via the normal form against the cached grevlex basis.
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  /// Generators printed as "<g1, g2, ...>".
  std::string str() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GBasis<kNumVars>>> bases;
  };

  Field field_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool member(const Polynomial& f, const Ideal& ideal);

/// True iff the reduced grevlex bases coincide.
bool ideals_equal(const Ideal& a, const Ideal& b);

/// I ∩ K[x,y,z,w] for an ideal of the 5-variable ring, via a block order
/// with the auxiliary variable t first.
Ideal eliminate(const std::vector<ElimPolynomial>& generators, Field field = Field::rationals());

/// I ∩ J as the elimination of t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

/// I : f. Throws DomainError for f = 0.
Ideal colon(const Ideal& ideal, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  int steps = 0;  // number of colon operations that enlarged the ideal
};

inline constexpr int kDefaultStepCap = 64;

/// I : f^∞ by iterated colon until the reduced bases stabilize; throws
/// ResourceError("saturate", ...) past `step_cap` iterations.
Saturation saturate_counted(const Ideal& ideal, const Polynomial& f, int step_cap = kDefaultStepCap);
Ideal saturate(const Ideal& ideal, const Polynomial& f, int step_cap = kDefaultStepCap);

/// I : (x,y,z,w)^∞ as the intersection over the variables v of I : v^∞.
Ideal saturate_irrelevant(const Ideal& ideal, int step_cap = kDefaultStepCap);

/// Ideal of the initial forms in_ω of a Groebner basis under weight(ω)
/// refined by grevlex, which generates in_ω(I).
Ideal initial_ideal(const Ideal& ideal, const WeightVector& omega);

/// Ideal generated by the grevlex leading monomials.
Ideal leading_ideal(const Ideal& ideal);

}  // namespace flatlim

#endif  // FLATLIM_IDEAL_HPP
