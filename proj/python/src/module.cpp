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

// Python bindings. Polynomials cross the boundary as strings, reports as
// JSON text; the pure-Python wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "flatlim/certify.hpp"
#include "flatlim/error.hpp"
#include "flatlim/family.hpp"
#include "flatlim/hilbert.hpp"
#include "flatlim/ideal.hpp"
#include "flatlim/report.hpp"

namespace py = pybind11;
using namespace flatlim;

namespace {

Ideal make_ideal(const std::vector<std::string>& generators, const std::string& field_name) {
  Field field = field_from_name(field_name);
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, field));
  return Ideal(std::move(gens), field);
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

CertifyOptions options(long degree_bound, int step_cap) {
  CertifyOptions o;
  o.degree_bound = degree_bound;
  o.step_cap = step_cap;
  return o;
}

}  // namespace

PYBIND11_MODULE(_flatlim, m) {
  m.doc() = "Flat limits of lines on a quadric: exact Groebner and Hilbert machinery";

  // Translators run most-recent first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "certify_json",
      [](const std::vector<std::string>& points, const std::string& field, long degree_bound, int step_cap) {
        Field f = field_from_name(field);
        std::vector<Scalar> values;
        for (const auto& p : points) values.push_back(Scalar::parse(p, f));
        CertificationReport r;
        {
          py::gil_scoped_release release;
          r = certify(values, options(degree_bound, step_cap));
        }
        return report_to_json(r);
      },
      py::arg("points"), py::arg("field") = "QQ", py::arg("degree_bound") = 64, py::arg("step_cap") = kDefaultStepCap);

  m.def(
      "random_points",
      [](std::size_t d, std::uint64_t seed, long bound, const std::string& field) {
        std::vector<std::string> out;
        PointSet pts = random_points(d, seed, bound, field_from_name(field));
        for (const auto& a : pts.values()) out.push_back(a.str());
        return out;
      },
      py::arg("d"), py::arg("seed"), py::arg("bound") = 10, py::arg("field") = "QQ");

  m.def(
      "report_text", [](const std::string& json) { return report_to_text(report_from_json(json)); }, py::arg("json"));

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& generators, const std::string& order, const std::string& field) {
        Ideal ideal = make_ideal(generators, field);
        return strings(ideal.groebner(TermOrder::parse(order)).elements());
      },
      py::arg("generators"), py::arg("order") = "grevlex", py::arg("field") = "QQ");

  m.def(
      "contains",
      [](const std::vector<std::string>& generators, const std::string& f, const std::string& field) {
        Ideal ideal = make_ideal(generators, field);
        return ideal.contains(parse_polynomial(f, ideal.field()));
      },
      py::arg("generators"), py::arg("f"), py::arg("field") = "QQ");

  m.def(
      "initial_ideal",
      [](const std::vector<std::string>& generators, const std::vector<long>& weights, const std::string& field) {
        return strings(initial_ideal(make_ideal(generators, field), WeightVector(weights)).groebner().elements());
      },
      py::arg("generators"), py::arg("weights"), py::arg("field") = "QQ");

  m.def(
      "saturate",
      [](const std::vector<std::string>& generators, const std::string& field, int step_cap) {
        return strings(saturate_irrelevant(make_ideal(generators, field), step_cap).groebner().elements());
      },
      py::arg("generators"), py::arg("field") = "QQ", py::arg("step_cap") = kDefaultStepCap);

  m.def(
      "hilbert_polynomial",
      [](const std::vector<std::string>& generators, const std::string& field) {
        HilbertPolynomial hp = hilbert_polynomial(make_ideal(generators, field));
        std::vector<std::string> coeffs;
        for (const auto& c : hp.coefficients()) coeffs.push_back(c.get_str());
        return py::make_tuple(hp.krull_dimension(), coeffs, hp.str());
      },
      py::arg("generators"), py::arg("field") = "QQ");

  m.def(
      "hilbert_function",
      [](const std::vector<std::string>& generators, long max_degree, const std::string& field) {
        return hilbert_function_values(make_ideal(generators, field), max_degree);
      },
      py::arg("generators"), py::arg("max_degree"), py::arg("field") = "QQ");

  m.def(
      "catalan", [](long d) { return catalan_c(d).get_str(); }, py::arg("d"));
}
