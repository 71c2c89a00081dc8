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

#include "flatlim/groebner.hpp"

#include <algorithm>

namespace flatlim {

namespace {

template <std::size_t N>
using Terms = std::vector<BasicTerm<N>>;

template <std::size_t N>
Terms<N> sorted_by(const BasicPolynomial<N>& p, const TermOrder& order) {
  Terms<N> t = p.terms();
  if (order.kind() != TermOrder::Kind::kGrevlex) {
    std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return order.compare(a.mono, b.mono) > 0; });
  }
  return t;
}

template <std::size_t N>
unsigned support_mask(const BasicMonomial<N>& m) {
  unsigned mask = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (m.exponent(i) != 0) mask |= 1U << i;
  }
  return mask;
}

// Divides an integral rational polynomial by the gcd of its coefficients
// and makes the leading coefficient positive.
template <std::size_t N>
void remove_content(Terms<N>& head, Terms<N>& tail) {
  Integer g = 0;
  for (const auto* part : {&head, &tail}) {
    for (const auto& t : *part) {
      g = int_gcd(g, t.coeff.raw_rational().get_num());
      if (g == 1) break;
    }
  }
  const BasicTerm<N>* lead = !head.empty() ? &head.front() : !tail.empty() ? &tail.front() : nullptr;
  if (lead == nullptr) return;
  if (lead->coeff.sign() < 0) g = -g;
  if (g == 1) return;
  Scalar inv = Scalar(Rational(Integer(1), g));
  for (auto* part : {&head, &tail}) {
    for (auto& t : *part) t.coeff *= inv;
  }
}

// Clears denominators so that fraction-free reduction sees integral input.
template <std::size_t N>
void make_integral(Terms<N>& terms) {
  Integer den = 1;
  for (const auto& t : terms) {
    const Integer& d = t.coeff.raw_rational().get_den();
    if (d != 1) den = den / int_gcd(den, d) * d;
  }
  if (den == 1) return;
  Scalar scale = Scalar(Rational(den));
  for (auto& t : terms) t.coeff *= scale;
}

// Working representation: terms sorted descending by the working order.
template <std::size_t N>
class Reducer {
 public:
  using Mono = BasicMonomial<N>;

  Reducer(const TermOrder& order, Field field, bool fraction_free)
      : order_(order), field_(field), fraction_free_(fraction_free && field.is_rational()) {}

  void clear() { basis_.clear(); }

  void add(const Terms<N>* poly) {
    basis_.push_back({poly, poly->front().mono, support_mask(poly->front().mono)});
  }

  // Fully reduces f (top and tail). In fraction-free mode the result is a
  // nonzero rational multiple of the true remainder, made primitive.
  Terms<N> reduce(Terms<N> f) const {
    Terms<N> result;
    std::size_t pos = 0;
    int steps = 0;
    while (pos < f.size()) {
      const BasicTerm<N>& t = f[pos];
      const Entry* divisor = find_divisor(t.mono);
      if (divisor == nullptr) {
        result.push_back(t);
        ++pos;
        continue;
      }
      const Terms<N>& g = *divisor->poly;
      Scalar a = Scalar::one(field_);
      Scalar b;
      if (fraction_free_) {
        const Integer& cf = t.coeff.raw_rational().get_num();
        const Integer& cg = g.front().coeff.raw_rational().get_num();
        Integer d = int_gcd(cf, cg);
        a = Scalar(Rational(Integer(cg / d)));
        b = Scalar(Rational(Integer(cf / d)));
        if (!a.is_one()) {
          for (auto& r : result) r.coeff *= a;
        }
      } else {
        b = t.coeff / g.front().coeff;
      }
      f = combine(f, pos, a, b, t.mono / divisor->lead, g);
      pos = 0;
      if (fraction_free_ && ++steps % 24 == 0) remove_content(result, f);
    }
    if (fraction_free_) remove_content(result, f);
    return result;
  }

  // a * f[from+1..] - b * m * g[1..]; the leading terms cancel by
  // construction.
  Terms<N> combine(const Terms<N>& f, std::size_t from, const Scalar& a, const Scalar& b, const Mono& m,
                   const Terms<N>& g) const {
    Terms<N> out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from + 1;
    std::size_t j = 1;
    bool scale = !a.is_one();
    while (i < f.size() || j < g.size()) {
      int c;
      Mono gm;
      if (j < g.size()) gm = g[j].mono * m;
      if (i == f.size()) {
        c = -1;
      } else if (j == g.size()) {
        c = 1;
      } else {
        c = order_.compare(f[i].mono, gm);
      }
      if (c > 0) {
        out.push_back(scale ? BasicTerm<N>{f[i].coeff * a, f[i].mono} : f[i]);
        ++i;
      } else if (c < 0) {
        out.push_back({-(b * g[j].coeff), gm});
        ++j;
      } else {
        Scalar s = scale ? f[i].coeff * a : f[i].coeff;
        s -= b * g[j].coeff;
        if (!s.is_zero()) out.push_back({std::move(s), gm});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // S-polynomial of f and g (both sorted by the working order).
  Terms<N> s_polynomial(const Terms<N>& f, const Terms<N>& g) const {
    Mono l = lcm(f.front().mono, g.front().mono);
    Scalar a;
    Scalar b;
    if (fraction_free_) {
      const Integer& cf = f.front().coeff.raw_rational().get_num();
      const Integer& cg = g.front().coeff.raw_rational().get_num();
      Integer d = int_gcd(cf, cg);
      a = Scalar(Rational(Integer(cg / d)));
      b = Scalar(Rational(Integer(cf / d)));
    } else {
      a = Scalar::one(field_);
      b = f.front().coeff / g.front().coeff;
    }
    Terms<N> fm;
    fm.reserve(f.size());
    Mono mf = l / f.front().mono;
    for (const auto& t : f) fm.push_back({t.coeff, t.mono * mf});
    return combine(fm, 0, a, b, l / g.front().mono, g);
  }

 private:
  struct Entry {
    const Terms<N>* poly;
    Mono lead;
    unsigned mask;
  };

  const Entry* find_divisor(const Mono& m) const {
    unsigned mask = support_mask(m);
    for (const auto& e : basis_) {
      if ((e.mask & ~mask) == 0 && e.lead.divides(m)) return &e;
    }
    return nullptr;
  }

  const TermOrder& order_;
  Field field_;
  bool fraction_free_;
  std::vector<Entry> basis_;
};

template <std::size_t N>
void make_monic(Terms<N>& t) {
  if (t.empty() || t.front().coeff.is_one()) return;
  Scalar inv = t.front().coeff.inverse();
  for (auto& term : t) term.coeff *= inv;
}

template <std::size_t N>
BasicPolynomial<N> to_canonical(const Terms<N>& t, Field field) {
  return BasicPolynomial<N>::from_terms(t, field);
}

long graded_degree(const auto& mono, const std::vector<long>& grading) {
  if (grading.empty()) return mono.degree();
  long d = 0;
  for (std::size_t i = 0; i < grading.size(); ++i) d += grading[i] * static_cast<long>(mono.exponent(i));
  return d;
}

}  // namespace

template <std::size_t N>
GBasis<N> GBasis<N>::from_reduced(TermOrder order, Field field, std::vector<Poly> elements, bool truncated) {
  GBasis b(std::move(order), field);
  b.truncated_ = truncated;
  std::vector<std::pair<Mono, Poly>> items;
  for (auto& e : elements) {
    if (e.is_zero()) continue;
    const auto& lt = leading_term(e, b.order_);
    Mono lead = lt.mono;
    if (!lt.coeff.is_one()) e = lt.coeff.inverse() * e;
    items.emplace_back(lead, std::move(e));
  }
  std::sort(items.begin(), items.end(),
            [&](const auto& x, const auto& y) { return b.order_.compare(x.first, y.first) < 0; });
  for (auto& [lead, p] : items) {
    b.leads_.push_back(lead);
    b.elements_.push_back(std::move(p));
  }
  return b;
}

template <std::size_t N>
GBasis<N> buchberger(const std::vector<BasicPolynomial<N>>& generators, const TermOrder& order,
                     const GroebnerOptions& options, GroebnerStats* stats) {
  using Mono = BasicMonomial<N>;
  if (order.num_vars() != N) throw DomainError("term order has the wrong number of variables");
  Field field = generators.empty() ? Field::rationals() : generators.front().field();
  for (const auto& g : generators) {
    if (!(g.field() == field) && !g.is_zero()) throw DomainError("generators over different fields");
  }
  const std::vector<long>& grading = options.grading;
  if (options.degree_bound) {
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      long d0 = graded_degree(g.terms().front().mono, grading);
      for (const auto& t : g.terms()) {
        if (graded_degree(t.mono, grading) != d0) {
          throw DomainError("degree-truncated Groebner basis needs homogeneous generators");
        }
      }
    }
  }

  GroebnerStats local_stats;
  GroebnerStats& st = stats ? *stats : local_stats;
  const bool ff = field.is_rational();

  struct Entry {
    Terms<N> poly;
    Mono lead;
    bool active = true;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Mono lcm;
    long degree;
  };
  std::vector<Entry> basis;
  std::vector<Pair> pairs;
  basis.reserve(64);

  auto pair_before = [&](const Pair& p, const Pair& q) {
    if (p.degree != q.degree) return p.degree < q.degree;
    int c = order.compare(p.lcm, q.lcm);
    if (c != 0) return c < 0;
    if (p.j != q.j) return p.j < q.j;
    return p.i < q.i;
  };

  // Gebauer-Moeller installation of a new element.
  auto update = [&](Terms<N> h) {
    std::size_t k = basis.size();
    Mono hl = h.front().mono;
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].active) fresh.push_back({i, k, lcm(basis[i].lead, hl), 0});
    }
    std::vector<bool> dropped(fresh.size(), false);
    std::vector<bool> kept(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool coprime = basis[p.i].lead.coprime(hl);
      bool keep = true;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          if (b == a || dropped[b]) continue;
          if (b < a && !kept[b]) continue;
          if (fresh[b].lcm.divides(p.lcm)) {
            keep = false;
            break;
          }
        }
      }
      if (keep) {
        kept[a] = true;
      } else {
        dropped[a] = true;
      }
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      bool chain = hl.divides(p.lcm) && lcm(basis[p.i].lead, hl) != p.lcm && lcm(basis[p.j].lead, hl) != p.lcm;
      if (chain) {
        ++st.pairs_skipped_by_criteria;
      } else {
        next.push_back(p);
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      Pair p = fresh[a];
      if (!kept[a] || basis[p.i].lead.coprime(hl)) {
        ++st.pairs_skipped_by_criteria;
        continue;
      }
      p.degree = graded_degree(p.lcm, grading);
      next.push_back(p);
    }
    pairs = std::move(next);
    for (auto& e : basis) {
      if (e.active && hl.divides(e.lead)) e.active = false;
    }
    basis.push_back({std::move(h), hl, true});
  };

  Reducer<N> reducer(order, field, ff);
  auto rebuild_reducer = [&] {
    reducer.clear();
    for (const auto& e : basis) {
      if (e.active) reducer.add(&e.poly);
    }
  };

  bool truncated = false;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    rebuild_reducer();
    Terms<N> input = sorted_by(g, order);
    if (ff) make_integral(input);
    Terms<N> h = reducer.reduce(std::move(input));
    if (h.empty()) continue;
    if (!ff) make_monic(h);
    update(std::move(h));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (pair_before(*it, *best)) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    ++st.pairs_considered;
    if (options.degree_bound && p.degree > *options.degree_bound) {
      truncated = true;
      continue;
    }
    rebuild_reducer();
    Terms<N> s = reducer.s_polynomial(basis[p.i].poly, basis[p.j].poly);
    ++st.pairs_reduced;
    Terms<N> h = reducer.reduce(std::move(s));
    if (h.empty()) {
      ++st.zero_reductions;
      continue;
    }
    if (!ff) make_monic(h);
    update(std::move(h));
  }

  // The active elements form a minimal basis; inter-reduce the tails.
  std::vector<const Entry*> minimal;
  for (const auto& e : basis) {
    if (e.active) minimal.push_back(&e);
  }
  std::vector<BasicPolynomial<N>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    Reducer<N> exact(order, field, false);
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) exact.add(&minimal[b]->poly);
    }
    const Terms<N>& whole = minimal[a]->poly;
    Terms<N> full{whole.front()};
    Terms<N> tail = exact.reduce(Terms<N>(whole.begin() + 1, whole.end()));
    full.insert(full.end(), tail.begin(), tail.end());
    make_monic(full);
    reduced.push_back(to_canonical(full, field));
  }
  return GBasis<N>::from_reduced(order, field, std::move(reduced), truncated);
}

template <std::size_t N>
BasicPolynomial<N> normal_form(const BasicPolynomial<N>& f, const GBasis<N>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  if (!(f.field() == basis.field())) throw DomainError("normal form over different fields");
  std::vector<Terms<N>> sorted;
  sorted.reserve(basis.size());
  for (const auto& g : basis.elements()) sorted.push_back(sorted_by(g, basis.order()));
  Reducer<N> reducer(basis.order(), basis.field(), false);
  for (const auto& g : sorted) reducer.add(&g);
  return to_canonical(reducer.reduce(sorted_by(f, basis.order())), f.field());
}

template <std::size_t N>
bool verify_groebner(const GBasis<N>& basis) {
  std::vector<Terms<N>> sorted;
  for (const auto& g : basis.elements()) sorted.push_back(sorted_by(g, basis.order()));
  Reducer<N> reducer(basis.order(), basis.field(), false);
  for (const auto& g : sorted) reducer.add(&g);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!reducer.reduce(reducer.s_polynomial(sorted[i], sorted[j])).empty()) return false;
    }
  }
  return true;
}

template <std::size_t N>
bool is_reduced(const GBasis<N>& basis) {
  const auto& leads = basis.leading_monomials();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& g = basis.elements()[i];
    if (!leading_term(g, basis.order()).coeff.is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.terms()) {
        if (leads[j].divides(t.mono)) return false;
      }
    }
  }
  return true;
}

template class GBasis<kNumVars>;
template class GBasis<kElimVars>;

#define FLATLIM_INSTANTIATE(N)                                                                                \
  template GBasis<N> buchberger<N>(const std::vector<BasicPolynomial<N>>&, const TermOrder&,                \
                                   const GroebnerOptions&, GroebnerStats*);                                 \
  template BasicPolynomial<N> normal_form<N>(const BasicPolynomial<N>&, const GBasis<N>&);                  \
  template bool verify_groebner<N>(const GBasis<N>&);                                                       \
  template bool is_reduced<N>(const GBasis<N>&);

FLATLIM_INSTANTIATE(kNumVars)
FLATLIM_INSTANTIATE(kElimVars)

#undef FLATLIM_INSTANTIATE

}  // namespace flatlim
