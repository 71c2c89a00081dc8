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

#include "flatlim/ideal.hpp"

#include "flatlim/log.hpp"

namespace flatlim {

Ideal::Ideal(Field field) : field_(field), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(std::vector<Polynomial> generators, Field field) : Ideal(field) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!(g.field() == field)) throw DomainError("generator over a different field");
    generators_.push_back(std::move(g));
  }
}

Ideal::Ideal(std::initializer_list<Polynomial> generators)
    : Ideal(std::vector<Polynomial>(generators),
            generators.size() ? generators.begin()->field() : Field::rationals()) {}

Ideal Ideal::unit(Field field) { return Ideal({Polynomial(Scalar::one(field))}, field); }

Ideal Ideal::parse(std::string_view text, Field field) { return Ideal(parse_polynomial_list(text, field), field); }

bool Ideal::is_homogeneous() const {
  for (const auto& g : generators_) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

bool Ideal::is_unit() const { return groebner().is_unit(); }

bool Ideal::is_monomial() const {
  for (const auto& g : generators_) {
    if (!g.is_monomial()) return false;
  }
  return true;
}

const GBasis<kNumVars>& Ideal::groebner(const TermOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order.name());
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const GBasis<kNumVars>>(buchberger(generators_, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order.name(), std::move(basis));
  return *it->second;
}

bool Ideal::has_cached(const TermOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.count(order.name()) != 0;
}

void Ideal::seed(GBasis<kNumVars> basis) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  std::string key = basis.order().name();
  cache_->bases.emplace(key, std::make_shared<const GBasis<kNumVars>>(std::move(basis)));
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

std::string Ideal::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].str();
  }
  return out + ">";
}

bool member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideals_equal(const Ideal& a, const Ideal& b) {
  return a.field() == b.field() && a.groebner().elements() == b.groebner().elements();
}

Ideal eliminate(const std::vector<ElimPolynomial>& generators, Field field) {
  GroebnerOptions options;
  // t has degree 0, so t*f and (1-t)*g stay homogeneous for the selection
  // strategy when f and g are.
  options.grading = {1, 1, 1, 1, 0};
  GBasis<kElimVars> basis = buchberger(generators, TermOrder::eliminate_aux(), options);
  std::vector<Polynomial> kept;
  for (const auto& g : basis.elements()) {
    if (g.degree_in(kT) <= 0) kept.push_back(from_elim(g));
  }
  Ideal result(kept, field);
  // t-free elements of a reduced block-order basis form the reduced basis of
  // the elimination ideal for the restricted order.
  result.seed(GBasis<kNumVars>::from_reduced(TermOrder::grevlex(), field, std::move(kept)));
  return result;
}

namespace {

const std::vector<Polynomial>& best_generators(const Ideal& ideal) {
  if (ideal.has_cached(TermOrder::grevlex())) return ideal.groebner().elements();
  return ideal.generators();
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.field() == b.field())) throw DomainError("intersection of ideals over different fields");
  Field field = a.field();
  if (a.is_zero() || b.is_zero()) return Ideal(field);
  if (a.has_cached(TermOrder::grevlex()) && a.is_unit()) return b;
  if (b.has_cached(TermOrder::grevlex()) && b.is_unit()) return a;
  ElimPolynomial t = ElimPolynomial::var(kT, field);
  ElimPolynomial one_minus_t = ElimPolynomial(Scalar::one(field)) - t;
  std::vector<ElimPolynomial> gens;
  for (const auto& f : best_generators(a)) gens.push_back(t * to_elim(f));
  for (const auto& g : best_generators(b)) gens.push_back(one_minus_t * to_elim(g));
  return eliminate(gens, field);
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw DomainError("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  Ideal both = intersect(ideal, Ideal({f}, ideal.field()));
  std::vector<Polynomial> quotients;
  for (const auto& g : both.groebner().elements()) quotients.push_back(divide_exact(g, f));
  return Ideal(std::move(quotients), ideal.field());
}

Saturation saturate_counted(const Ideal& ideal, const Polynomial& f, int step_cap) {
  Saturation result{ideal, 0};
  while (true) {
    Ideal next = colon(result.ideal, f);
    if (ideals_equal(next, result.ideal)) return result;
    if (++result.steps > step_cap) {
      throw ResourceError("saturate", "no stabilization after " + std::to_string(step_cap) + " colon steps");
    }
    result.ideal = std::move(next);
  }
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, int step_cap) {
  return saturate_counted(ideal, f, step_cap).ideal;
}

Ideal saturate_irrelevant(const Ideal& ideal, int step_cap) {
  if (ideal.is_zero()) return ideal;
  std::vector<Ideal> parts;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    Saturation s = saturate_counted(ideal, Polynomial::var(v, ideal.field()), step_cap);
    log::debug("saturation by " + std::string(1, kVarNames[v]) + ": " + std::to_string(s.steps) + " steps");
    parts.push_back(std::move(s.ideal));
  }
  return intersect(parts);
}

Ideal initial_ideal(const Ideal& ideal, const WeightVector& omega) {
  TermOrder order = TermOrder::weight_refined(omega);
  const GBasis<kNumVars>& basis = ideal.groebner(order);
  std::vector<Polynomial> forms;
  for (const auto& g : basis.elements()) forms.push_back(initial_form(g, omega));
  Ideal result(forms, ideal.field());
  // The initial forms of a reduced weight(ω)>grevlex basis are the reduced
  // grevlex basis of in_ω(I).
  result.seed(GBasis<kNumVars>::from_reduced(TermOrder::grevlex(), ideal.field(), std::move(forms)));
  return result;
}

Ideal leading_ideal(const Ideal& ideal) {
  std::vector<Polynomial> monos;
  for (const auto& m : ideal.groebner().leading_monomials()) {
    monos.emplace_back(Scalar::one(ideal.field()), m);
  }
  return Ideal(std::move(monos), ideal.field());
}

}  // namespace flatlim
