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

#include "flatlim/certify.hpp"

#include <algorithm>

#include "flatlim/binary_form.hpp"
#include "flatlim/family.hpp"
#include "flatlim/log.hpp"

namespace flatlim {

std::string Verdict::str() const {
  switch (kind) {
    case Kind::kExtremalLimit:
      return "ExtremalLimit";
    case Kind::kEmbeddedPoints:
      return "EmbeddedPoints(" + std::to_string(length) + ")";
    case Kind::kRejected:
      break;
  }
  return "Rejected(" + reason + ")";
}

int Verdict::exit_code() const {
  switch (kind) {
    case Kind::kExtremalLimit:
      return 0;
    case Kind::kEmbeddedPoints:
      return 2;
    case Kind::kRejected:
      break;
  }
  return 3;
}

IdealRecord IdealRecord::of(const Ideal& ideal) {
  IdealRecord r;
  r.generators = ideal.generators();
  r.groebner = ideal.groebner().elements();
  return r;
}

namespace {

long max_basis_degree(const Ideal& ideal) {
  long m = 0;
  for (const auto& g : ideal.groebner().elements()) m = std::max(m, g.degree());
  return m;
}

void require_window(long window, const CertifyOptions& options, const std::string& stage) {
  if (window > options.degree_bound) {
    throw ResourceError(stage, "Hilbert window " + std::to_string(window) + " exceeds degree bound " +
                                   std::to_string(options.degree_bound));
  }
}

// Stages that can fail; the name ends up in Rejected verdicts.
class Pipeline {
 public:
  Pipeline(const std::vector<Scalar>& points, const CertifyOptions& options) : points_(points), options_(options) {}

  CertificationReport run() {
    CertificationReport& r = report_;
    r.instance.d = static_cast<long>(points_.size());
    r.instance.field = points_.empty() ? Field::rationals().name() : points_.front().field().name();
    for (const auto& a : points_) r.instance.points.push_back(a.str());
    try {
      execute();
    } catch (const ResourceError& e) {
      r.verdict = Verdict::rejected(e.stage(), e.what());
    } catch (const DomainError& e) {
      r.verdict = Verdict::rejected(stage_, e.what());
    }
    if (r.verdict.kind == Verdict::Kind::kRejected) {
      log::info("rejected at " + r.verdict.stage + ": " + r.verdict.reason);
    }
    return r;
  }

 private:
  void enter(const char* stage) {
    stage_ = stage;
    log::debug("stage " + stage_);
  }

  void execute() {
    CertificationReport& r = report_;
    enter("input");
    if (points_.size() < 2) throw DomainError("need at least two points");
    if (!PointSet::pairwise_distinct(points_)) throw DomainError("duplicate points");
    PointSet pts(points_);
    const long d = static_cast<long>(pts.d());
    const Field field = pts.field();
    const WeightVector omega = WeightVector::degeneration(d);
    r.distinct_sums = distinct_sums(pts);

    enter("curve_ideal");
    Ideal curve = curve_ideal(pts);
    Polynomial prod_m = Polynomial(Scalar::one(field));
    for (const auto& a : pts.values()) prod_m *= line_form_m(a);
    r.identities.quadric_in_curve = curve.contains(quadric(field));
    r.identities.product_m_in_curve = curve.contains(prod_m);
    if (!r.identities.quadric_in_curve || !r.identities.product_m_in_curve) {
      throw Error("curve ideal misses the quadric or the product of the m_i");
    }

    enter("det_A");
    DeterminantSplit split = det_A(pts);
    r.a = split.a;
    r.g = split.g;
    r.b = split.b;
    r.identities.a_in_curve = curve.contains(split.a);
    r.identities.g_vandermonde = split.g == vandermonde_G(pts);
    if (!r.identities.a_in_curve) throw Error("A is not in the curve ideal");

    enter("poly_P");
    r.p = poly_P(pts);
    r.f = poly_F(pts);
    r.identities.initial_form_a = check_in_A(pts, split, r.p);
    r.identities.p_closed_form = check_P_closed_form(pts).equal;
    r.identities.p_divisible = check_P_divisible(pts);
    r.identities.catalan_coefficient = check_P_catalan_coefficient(pts);

    enter("gcd");
    Polynomial g0 = binary_form_gcd(r.f, r.g);
    r.gcd_fg = g0;
    const bool coprime = g0.is_constant();
    if (coprime != r.distinct_sums) {
      r.notes.push_back("gcd(F, G) and the distinct-sums condition disagree");
    }

    enter("initial_ideal");
    Ideal initial = initial_ideal(curve, omega);
    r.initial_ideal = IdealRecord::of(initial);

    enter("flatness");
    r.hilbert.curve = hilbert_polynomial(curve);
    r.hilbert.initial = hilbert_polynomial(initial);
    r.hilbert.window = max_basis_degree(curve) + 4;
    require_window(r.hilbert.window, options_, stage_);
    r.hilbert.curve_values = hilbert_function_values(curve, r.hilbert.window);
    r.hilbert.initial_values = hilbert_function_values(initial, r.hilbert.window);
    r.hilbert.flat = r.hilbert.curve_values == r.hilbert.initial_values && r.hilbert.curve == r.hilbert.initial;
    if (!r.hilbert.flat) throw Error("Hilbert functions of I_C and its initial ideal differ");

    enter("saturate");
    Ideal saturated = saturate_irrelevant(initial, options_.step_cap);
    r.saturated_ideal = IdealRecord::of(saturated);
    r.hilbert.saturated = hilbert_polynomial(saturated);

    if (coprime) {
      generic(d, saturated);
    } else {
      degenerate(d, saturated, g0);
    }
    r.notes.push_back("Rao module shift b = deg F - 1 recorded, not independently verified");
    if (d >= 4) r.notes.push_back("claim about the d-uple structure dL not computed");
  }

  void generic(long d, const Ideal& saturated) {
    CertificationReport& r = report_;
    enter("extremal_ideal");
    Ideal candidate = extremal_ideal(d, r.f, r.g);
    r.extremal_candidate = IdealRecord::of(candidate);
    r.hilbert.candidate = hilbert_polynomial(candidate);
    r.extremal_genus = extremal_genus(d, r.f.degree());

    enter("rao_check");
    CompleteIntersectionCheck ci = ci_hilbert_check(r.f, r.g);
    r.rao.checked = true;
    r.rao.matches = ci.matches;
    r.rao.values = ci.values;
    r.rao.expected = ci.expected;
    r.rao.total_dimension = ci.total_dimension;
    r.rao.shift = r.f.degree() - 1;
    r.rao_check = ci.matches;

    enter("compare");
    if (!ideals_equal(saturated, candidate)) {
      throw DomainError("saturated initial ideal differs from the extremal ideal");
    }
    HilbertPolynomial expected(2, {Integer(d), Integer(d)});
    if (!(r.hilbert.saturated == expected)) throw DomainError("Hilbert polynomial is not dn + d");
    if (!r.rao_check) throw DomainError("Rao module check failed");
    r.embedded_length = 0;
    r.verdict = Verdict::extremal();
  }

  void degenerate(long d, const Ideal& saturated, const Polynomial& g0) {
    CertificationReport& r = report_;
    r.degenerate_path = true;
    r.notes.push_back("degenerate case: extremal part is heuristic, certified a posteriori");
    r.embedded_point = primitive_form(g0);

    enter("extremal_ideal");
    Polynomial f1 = divide_exact(r.f, g0);
    Polynomial g1 = divide_exact(r.g, g0);
    Ideal candidate = extremal_ideal(d, f1, g1);
    r.extremal_candidate = IdealRecord::of(candidate);
    r.hilbert.candidate = hilbert_polynomial(candidate);
    r.extremal_genus = extremal_genus(d, f1.degree());
    r.rao.shift = f1.degree() - 1;

    enter("containment");
    if (!candidate.contains(saturated)) throw DomainError("extremal candidate does not contain the saturated limit");

    enter("embedded_length");
    // Once both Hilbert functions agree with their polynomials the
    // difference is the constant length of the embedded part.
    const auto& hs = r.hilbert.saturated.coefficients();
    const auto& hc = r.hilbert.candidate.coefficients();
    Integer s1 = hs.size() > 1 ? hs[1] : Integer(0);
    Integer c1 = hc.size() > 1 ? hc[1] : Integer(0);
    if (s1 != c1) throw DomainError("extremal candidate has a different degree");
    long window = std::max(max_basis_degree(saturated), max_basis_degree(candidate)) + 4;
    require_window(window, options_, stage_);
    std::vector<long> sat_values = hilbert_function_values(saturated, window);
    std::vector<long> cand_values = hilbert_function_values(candidate, window);
    long length = r.hilbert.saturated.evaluate(0).get_si() - r.hilbert.candidate.evaluate(0).get_si();
    for (long n = window - 2; n <= window; ++n) {
      if (sat_values[n] - cand_values[n] != length) {
        throw DomainError("Hilbert function difference has not stabilized within the window");
      }
    }
    if (length < 0) throw DomainError("negative embedded length");
    r.embedded_length = length;
    if (length == 0) throw DomainError("F and G share a factor but the limit shows no embedded excess");
    r.verdict = Verdict::embedded(length);
  }

  std::vector<Scalar> points_;
  CertifyOptions options_;
  CertificationReport report_;
  std::string stage_ = "input";
};

}  // namespace

CertificationReport certify(const std::vector<Scalar>& points, const CertifyOptions& options) {
  return Pipeline(points, options).run();
}

}  // namespace flatlim
