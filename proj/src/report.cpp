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

#include "flatlim/report.hpp"

#include <sstream>

#include <json.hpp>

namespace flatlim {

using Json = nlohmann::ordered_json;

Field field_from_name(std::string_view name) {
  if (name == "QQ") return Field::rationals();
  if (name.substr(0, 3) == "ZZ/") {
    Integer p = parse_integer(name.substr(3));
    if (!p.fits_ulong_p()) throw DomainError("field modulus out of range");
    return Field::prime(p.get_ui());
  }
  throw DomainError("unknown field '" + std::string(name) + "'");
}

namespace {

Json poly_list(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

Json ideal_json(const IdealRecord& r) {
  return Json{{"generators", poly_list(r.generators)}, {"order", r.order}, {"groebner", poly_list(r.groebner)}};
}

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& c : v) {
    if (!c.fits_slong_p()) throw DomainError("integer too large for the report");
    out.push_back(c.get_si());
  }
  return out;
}

Json hp_json(const HilbertPolynomial& hp) {
  return Json{{"krull_dimension", hp.krull_dimension()}, {"coefficients", integers(hp.coefficients())},
              {"text", hp.str()}};
}

std::string verdict_kind(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kExtremalLimit:
      return "ExtremalLimit";
    case Verdict::Kind::kEmbeddedPoints:
      return "EmbeddedPoints";
    case Verdict::Kind::kRejected:
      break;
  }
  return "Rejected";
}

Json to_json(const CertificationReport& r) {
  Json instance{{"d", r.instance.d}, {"field", r.instance.field}, {"points", r.instance.points}};
  if (r.instance.seed) instance["seed"] = *r.instance.seed;
  if (r.instance.bound) instance["bound"] = *r.instance.bound;
  const IdentityChecks& c = r.identities;
  Json identities{{"quadric_in_curve", c.quadric_in_curve},
                  {"product_m_in_curve", c.product_m_in_curve},
                  {"a_in_curve", c.a_in_curve},
                  {"g_vandermonde", c.g_vandermonde},
                  {"initial_form_a", c.initial_form_a},
                  {"p_closed_form", c.p_closed_form},
                  {"p_divisible", c.p_divisible},
                  {"catalan_coefficient", c.catalan_coefficient}};
  Json hilbert{{"curve", hp_json(r.hilbert.curve)},
               {"initial", hp_json(r.hilbert.initial)},
               {"saturated", hp_json(r.hilbert.saturated)},
               {"candidate", hp_json(r.hilbert.candidate)},
               {"window", r.hilbert.window},
               {"curve_values", r.hilbert.curve_values},
               {"initial_values", r.hilbert.initial_values},
               {"flat", r.hilbert.flat}};
  Json rao{{"checked", r.rao.checked},     {"matches", r.rao.matches},
           {"values", r.rao.values},       {"expected", r.rao.expected},
           {"total_dimension", r.rao.total_dimension}, {"shift", r.rao.shift}};
  Json verdict{{"kind", verdict_kind(r.verdict.kind)}};
  if (r.verdict.kind == Verdict::Kind::kEmbeddedPoints) verdict["length"] = r.verdict.length;
  if (r.verdict.kind == Verdict::Kind::kRejected) {
    verdict["stage"] = r.verdict.stage;
    verdict["reason"] = r.verdict.reason;
  }
  Json out{{"schema", kReportSchema},
           {"instance", instance},
           {"distinct_sums", r.distinct_sums},
           {"A", r.a.str()},
           {"G", r.g.str()},
           {"B", r.b.str()},
           {"P", r.p.str()},
           {"F", r.f.str()},
           {"gcd_FG", r.gcd_fg.str()},
           {"identities", identities},
           {"initial_ideal", ideal_json(r.initial_ideal)},
           {"saturated_ideal", ideal_json(r.saturated_ideal)},
           {"extremal_candidate", ideal_json(r.extremal_candidate)},
           {"hilbert", hilbert},
           {"extremal_genus", r.extremal_genus},
           {"embedded_length", r.embedded_length}};
  out["embedded_point"] = r.embedded_point ? Json(r.embedded_point->str()) : Json(nullptr);
  out["degenerate_path"] = r.degenerate_path;
  out["rao_check"] = r.rao_check;
  out["rao"] = rao;
  out["notes"] = r.notes;
  out["verdict"] = verdict;
  return out;
}

// ---------------------------------------------------------------- parsing

Polynomial read_poly(const Json& j, Field field) { return parse_polynomial(j.get<std::string>(), field); }

std::vector<Polynomial> read_polys(const Json& j, Field field) {
  std::vector<Polynomial> out;
  for (const auto& e : j) out.push_back(read_poly(e, field));
  return out;
}

IdealRecord read_ideal(const Json& j, Field field) {
  IdealRecord r;
  r.generators = read_polys(j.at("generators"), field);
  r.order = j.at("order").get<std::string>();
  r.groebner = read_polys(j.at("groebner"), field);
  return r;
}

HilbertPolynomial read_hp(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<long>());
  return HilbertPolynomial(j.at("krull_dimension").get<int>(), std::move(coeffs));
}

CertificationReport from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kReportSchema) throw DomainError("unsupported report schema");
  CertificationReport r;
  const Json& inst = j.at("instance");
  r.instance.d = inst.at("d").get<long>();
  r.instance.field = inst.at("field").get<std::string>();
  r.instance.points = inst.at("points").get<std::vector<std::string>>();
  if (inst.contains("seed")) r.instance.seed = inst.at("seed").get<std::uint64_t>();
  if (inst.contains("bound")) r.instance.bound = inst.at("bound").get<long>();
  Field field = field_from_name(r.instance.field);
  r.distinct_sums = j.at("distinct_sums").get<bool>();
  r.a = read_poly(j.at("A"), field);
  r.g = read_poly(j.at("G"), field);
  r.b = read_poly(j.at("B"), field);
  r.p = read_poly(j.at("P"), field);
  r.f = read_poly(j.at("F"), field);
  r.gcd_fg = read_poly(j.at("gcd_FG"), field);
  const Json& c = j.at("identities");
  r.identities.quadric_in_curve = c.at("quadric_in_curve").get<bool>();
  r.identities.product_m_in_curve = c.at("product_m_in_curve").get<bool>();
  r.identities.a_in_curve = c.at("a_in_curve").get<bool>();
  r.identities.g_vandermonde = c.at("g_vandermonde").get<bool>();
  r.identities.initial_form_a = c.at("initial_form_a").get<bool>();
  r.identities.p_closed_form = c.at("p_closed_form").get<bool>();
  r.identities.p_divisible = c.at("p_divisible").get<bool>();
  r.identities.catalan_coefficient = c.at("catalan_coefficient").get<bool>();
  r.initial_ideal = read_ideal(j.at("initial_ideal"), field);
  r.saturated_ideal = read_ideal(j.at("saturated_ideal"), field);
  r.extremal_candidate = read_ideal(j.at("extremal_candidate"), field);
  const Json& h = j.at("hilbert");
  r.hilbert.curve = read_hp(h.at("curve"));
  r.hilbert.initial = read_hp(h.at("initial"));
  r.hilbert.saturated = read_hp(h.at("saturated"));
  r.hilbert.candidate = read_hp(h.at("candidate"));
  r.hilbert.window = h.at("window").get<long>();
  r.hilbert.curve_values = h.at("curve_values").get<std::vector<long>>();
  r.hilbert.initial_values = h.at("initial_values").get<std::vector<long>>();
  r.hilbert.flat = h.at("flat").get<bool>();
  r.extremal_genus = j.at("extremal_genus").get<long>();
  r.embedded_length = j.at("embedded_length").get<long>();
  if (!j.at("embedded_point").is_null()) r.embedded_point = read_poly(j.at("embedded_point"), field);
  r.degenerate_path = j.at("degenerate_path").get<bool>();
  r.rao_check = j.at("rao_check").get<bool>();
  const Json& rao = j.at("rao");
  r.rao.checked = rao.at("checked").get<bool>();
  r.rao.matches = rao.at("matches").get<bool>();
  r.rao.values = rao.at("values").get<std::vector<long>>();
  r.rao.expected = rao.at("expected").get<std::vector<long>>();
  r.rao.total_dimension = rao.at("total_dimension").get<long>();
  r.rao.shift = rao.at("shift").get<long>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  const Json& v = j.at("verdict");
  std::string kind = v.at("kind").get<std::string>();
  if (kind == "ExtremalLimit") {
    r.verdict = Verdict::extremal();
  } else if (kind == "EmbeddedPoints") {
    r.verdict = Verdict::embedded(v.at("length").get<long>());
  } else if (kind == "Rejected") {
    r.verdict = Verdict::rejected(v.at("stage").get<std::string>(), v.at("reason").get<std::string>());
  } else {
    throw DomainError("unknown verdict '" + kind + "'");
  }
  return r;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string join_longs(const std::vector<long>& items) {
  std::vector<std::string> s;
  for (long v : items) s.push_back(std::to_string(v));
  return join(s, " ");
}

void print_ideal(std::ostringstream& out, const char* label, const IdealRecord& r) {
  out << label << " (reduced " << r.order << " basis, " << r.groebner.size() << " elements)\n";
  for (const auto& g : r.groebner) out << "    " << g.str() << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_json(const CertificationReport& report) { return to_json(report).dump(2) + "\n"; }

CertificationReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    return from_json(j);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

std::string report_to_text(const CertificationReport& r) {
  std::ostringstream out;
  out << "instance: d = " << r.instance.d << ", points (" << join(r.instance.points, ", ") << ") over "
      << r.instance.field;
  if (r.instance.seed) out << ", seed " << *r.instance.seed << ", bound " << r.instance.bound.value_or(0);
  out << "\n";
  out << "verdict: " << r.verdict.str() << "\n";
  if (r.verdict.kind == Verdict::Kind::kRejected) {
    out << "  stage: " << r.verdict.stage << "\n";
    if (r.a.is_zero()) return out.str();
  }
  out << "distinct sums: " << yes_no(r.distinct_sums) << "\n";
  out << "A = " << r.a.str() << "\n";
  out << "G = " << r.g.str() << "\n";
  out << "B = " << r.b.str() << "\n";
  out << "P = " << r.p.str() << "\n";
  out << "F = " << r.f.str() << "\n";
  out << "gcd(F, G) = " << r.gcd_fg.str() << "\n";
  const IdentityChecks& c = r.identities;
  out << "identities: q in I_C " << yes_no(c.quadric_in_curve) << ", prod m in I_C " << yes_no(c.product_m_in_curve)
      << ", A in I_C " << yes_no(c.a_in_curve) << ", G product " << yes_no(c.g_vandermonde) << ", in(A) "
      << yes_no(c.initial_form_a) << ", P closed form " << yes_no(c.p_closed_form) << ", z^(d-2) | P "
      << yes_no(c.p_divisible) << ", Catalan coefficient " << yes_no(c.catalan_coefficient) << "\n";
  if (!r.initial_ideal.groebner.empty()) print_ideal(out, "initial ideal", r.initial_ideal);
  if (!r.saturated_ideal.groebner.empty()) print_ideal(out, "saturation", r.saturated_ideal);
  if (!r.extremal_candidate.groebner.empty()) print_ideal(out, "extremal candidate", r.extremal_candidate);
  out << "Hilbert polynomials: I_C " << r.hilbert.curve.str() << ", initial " << r.hilbert.initial.str()
      << ", saturated " << r.hilbert.saturated.str() << ", candidate " << r.hilbert.candidate.str() << "\n";
  out << "flatness (n = 0.." << r.hilbert.window << "): " << yes_no(r.hilbert.flat) << "\n";
  out << "  H(I_C)  " << join_longs(r.hilbert.curve_values) << "\n";
  out << "  H(in)   " << join_longs(r.hilbert.initial_values) << "\n";
  out << "extremal genus: " << r.extremal_genus << "\n";
  out << "embedded length: " << r.embedded_length;
  if (r.embedded_point) out << " at " << r.embedded_point->str() << " = 0";
  out << "\n";
  if (r.rao.checked) {
    out << "Rao module: " << yes_no(r.rao.matches) << " (values " << join_longs(r.rao.values) << ", total "
        << r.rao.total_dimension << ", shift " << r.rao.shift << ")\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace flatlim
