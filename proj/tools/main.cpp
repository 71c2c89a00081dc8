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

// flatlim command-line tool.
//
// Exit codes: 0 extremal limit, 2 embedded points, 3 rejected, 1 internal
// error, 64 usage error. Batch runs exit with the worst verdict.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "flatlim/certify.hpp"
#include "flatlim/family.hpp"
#include "flatlim/groebner.hpp"
#include "flatlim/hilbert.hpp"
#include "flatlim/log.hpp"
#include "flatlim/report.hpp"

namespace {

using namespace flatlim;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return Field::rationals();
  if (text.rfind("p=", 0) == 0) {
    try {
      Integer p = parse_integer(text.substr(2));
      if (!p.fits_ulong_p()) throw UsageError("field modulus out of range");
      return Field::prime(p.get_ui());
    } catch (const Error& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  throw UsageError("--field must be q or p=<prime>");
}

// "7", "1,4,9" or "1..20".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--seed: '" + s + "' is not a nonnegative integer");
    }
    return std::stoull(s);
  };
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(number(item));
      continue;
    }
    std::uint64_t lo = number(item.substr(0, dots));
    std::uint64_t hi = number(item.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) throw UsageError("--seed: bad range '" + item + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw UsageError("--seed: empty list");
  return seeds;
}

void warn_characteristic(Field field) {
  if (field.characteristic() == 2 || field.characteristic() == 3) {
    std::cerr << "warning: characteristic " << field.characteristic()
              << " is excluded for the d = 4 example (points 0,1,2,3 collapse); results may be rejected\n";
  }
}

std::string render(const CertificationReport& report, bool json) {
  return json ? report_to_json(report) : report_to_text(report);
}

int worst_exit(const std::vector<int>& codes) {
  int worst = 0;
  for (int c : codes) {
    if (c == 3 || (c == 2 && worst == 0)) worst = c;
  }
  return worst;
}

// ---------------------------------------------------------------- certify

struct CertifyConfig {
  long d = 0;
  std::string points;
  bool random = false;
  std::string seed = "0";
  long bound = 10;
  std::string field = "q";
  bool json = false;
  long degree_bound = 64;
  int step_cap = kDefaultStepCap;
  unsigned jobs = 1;
};

int cmd_certify(const CertifyConfig& config) {
  Field field = parse_field(config.field);
  warn_characteristic(field);
  if (config.random == !config.points.empty()) throw UsageError("give exactly one of --points and --random");
  if (config.d < 2) throw UsageError("--d must be at least 2");
  if (config.bound < 1) throw UsageError("--bound must be positive");
  if (config.step_cap < 1) throw UsageError("--step-cap must be positive");
  CertifyOptions options;
  options.step_cap = config.step_cap;
  options.degree_bound = config.degree_bound;

  if (!config.random) {
    std::vector<Scalar> values;
    try {
      for (const auto& item : parse_polynomial_list(config.points, field)) {
        if (!item.is_constant()) throw UsageError("--points: entries must be numbers");
        values.push_back(item.is_zero() ? Scalar::zero(field) : item.leading_term().coeff);
      }
    } catch (const ParseError& e) {
      throw UsageError(std::string("--points: ") + e.what());
    }
    if (static_cast<long>(values.size()) != config.d) {
      throw UsageError("--points has " + std::to_string(values.size()) + " entries but --d is " +
                       std::to_string(config.d));
    }
    CertificationReport report = certify(values, options);
    std::cout << render(report, config.json);
    return report.verdict.exit_code();
  }

  std::vector<std::uint64_t> seeds = parse_seeds(config.seed);
  std::vector<std::string> outputs(seeds.size());
  std::vector<int> codes(seeds.size(), 0);
  std::vector<std::string> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        PointSet pts = random_points(config.d, seeds[i], config.bound, field);
        CertificationReport report = certify(pts.values(), options);
        report.instance.seed = seeds[i];
        report.instance.bound = config.bound;
        outputs[i] = render(report, config.json);
        codes[i] = report.verdict.exit_code();
      } catch (const std::exception& e) {
        errors[i] = e.what();
        codes[i] = kExitInternal;
      }
    }
  };
  unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(seeds.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Emit in seed order so that output does not depend on scheduling.
  bool batch = seeds.size() > 1;
  if (config.json && batch) std::cout << "[\n";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << "seed " << seeds[i] << ": " << errors[i] << "\n";
      return kExitInternal;
    }
    std::string out = outputs[i];
    if (config.json && batch) {
      out.pop_back();  // trailing newline
      std::cout << out << (i + 1 < seeds.size() ? ",\n" : "\n");
    } else {
      if (batch && i) std::cout << "\n";
      std::cout << out;
    }
  }
  if (config.json && batch) std::cout << "]\n";
  return worst_exit(codes);
}

// ---------------------------------------------------------------- example

int cmd_example(bool json) {
  Field q = Field::rationals();
  std::vector<Scalar> values;
  for (long a : {0, 1, 2, 3}) values.emplace_back(a);
  PointSet pts(values);
  CertificationReport report = certify(values);
  if (json) {
    std::cout << report_to_json(report);
    return report.verdict.exit_code();
  }

  Polynomial g1 = poly("(z+w)*(2*z+w)*(3*z+w)*(4*z+w)*(5*z+w)");
  Polynomial f1 = poly("2*z^3");
  Polynomial e = poly("3*z+w");
  Polynomial g = poly("12*(z+w)*(2*z+w)*(3*z+w)^2*(4*z+w)*(5*z+w)");
  Polynomial b = poly(
      "12*y*(3*z+w)*(2*y^2*z^2 - 30*y*z^3 + 148*z^4 - 15*y*z^2*w + 195*z^3*w - y*z*w^2 + 85*z^2*w^2 + 15*z*w^3 + "
      "w^4)");
  Polynomial x = Polynomial::var(kX, q);
  Polynomial y = Polynomial::var(kY, q);
  Polynomial z = Polynomial::var(kZ, q);
  Polynomial y3 = y.pow(3);
  // The printed list has the roles of F_1 and G_1 swapped in its seventh
  // generator; only xG_1 - y^3F_1 is homogeneous, so that one is used.
  std::vector<Polynomial> gens = parse_polynomial_list(
      "x^2, 6*x*y*z^2 + 2*x*y*z*w, y^4, x*y^2*w, 6*x*y^2*z, 6*x*y*z*w^2 + 2*x*y*w^3, 6*x*y^3", q);
  gens.insert(gens.begin() + 6, x * g1 - y3 * f1);
  Ideal printed_initial(gens, q);
  Ideal printed_saturation({x * x, x * y * e, x * y * y, y.pow(4), x * g1 - y3 * f1}, q);

  DeterminantSplit split = det_A(pts);
  Polynomial in_a = initial_form(split.a, WeightVector::degeneration(4));
  Ideal initial(report.initial_ideal.generators, q);
  Ideal saturated(report.saturated_ideal.generators, q);

  auto line = [](const char* what, bool ok) { std::cout << "check " << what << ": " << (ok ? "ok" : "FAILED") << "\n"; };
  bool all = true;
  auto check = [&](const char* what, bool ok) {
    line(what, ok);
    all = all && ok;
  };
  std::cout << report_to_text(report);
  std::cout << "G_1 = " << g1.str() << "\nF_1 = " << f1.str() << "\n";
  check("A = xG - zB as printed", split.a == x * g - z * b && split.g == g && split.b == b);
  check("in(A) = 12(3z+w)(xG_1 - y^3F_1)", in_a == Scalar(12L) * e * (x * g1 - y3 * f1));
  check("initial ideal equals the printed list", ideals_equal(initial, printed_initial));
  check("saturation equals <x^2, xy(3z+w), xy^2, y^4, xG_1 - y^3F_1>", ideals_equal(saturated, printed_saturation));
  check("embedded point 3z + w, length 1",
        report.embedded_point && *report.embedded_point == e && report.embedded_length == 1);
  check("extremal part of genus -2", report.extremal_genus == -2);
  if (!all) return kExitInternal;
  return report.verdict.exit_code();
}

// ---------------------------------------------------------------- utilities

int cmd_catalan(long max_d) {
  if (max_d < 2) throw UsageError("--max-d must be at least 2");
  for (long d = 2; d <= max_d; ++d) {
    std::cout << "c_" << d << " = " << catalan_c(d).get_str() << "\n";
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_gb(const std::string& order_name, const std::vector<std::string>& files, const std::string& field_text) {
  Field field = parse_field(field_text);
  TermOrder order = TermOrder::lex();
  try {
    order = TermOrder::parse(order_name);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
  for (const auto& path : files) {
    std::vector<Polynomial> gens;
    try {
      gens = parse_polynomial_list(read_file(path), field);
    } catch (const ParseError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      return kExitUsage;
    }
    if (files.size() > 1) std::cout << "# " << path << "\n";
    GBasis<kNumVars> basis = buchberger(gens, order);
    for (const auto& g : basis.elements()) std::cout << g.str() << "\n";
  }
  return 0;
}

int cmd_hilbert(const std::string& ideal_text, const std::string& file, const std::string& field_text, long values) {
  Field field = parse_field(field_text);
  if (ideal_text.empty() == file.empty()) throw UsageError("give exactly one of --ideal and --file");
  Ideal ideal;
  try {
    ideal = Ideal::parse(ideal_text.empty() ? read_file(file) : ideal_text, field);
  } catch (const ParseError& e) {
    std::cerr << "ideal: " << e.what() << "\n";
    return kExitUsage;
  }
  HilbertSeriesNumerator h = hilbert_series(ideal);
  std::cout << "numerator: " << h.str() << "\n";
  std::cout << "krull dimension: " << h.krull_dimension() << "\n";
  if (h.krull_dimension() <= 2) {
    HilbertPolynomial hp = hilbert_polynomial(h);
    std::cout << "HP = " << hp.str() << "\n";
    if (hp.krull_dimension() == 2) std::cout << "degree " << hp.degree() << ", genus " << hp.genus() << "\n";
  }
  std::cout << "H:";
  for (long n = 0; n <= values; ++n) std::cout << " " << h.dimension_in_degree(n).get_str();
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  flatlim::log::configure_from_env();
  CLI::App app{"Certify flat limits of lines on a quadric under a weight degeneration"};
  app.require_subcommand(1);

  CertifyConfig config;
  auto* certify_cmd = app.add_subcommand("certify", "Certify the limit for given or random points");
  certify_cmd->add_option("--d", config.d, "Number of lines")->required();
  certify_cmd->add_option("--points", config.points, "Comma-separated parameters a_1,...,a_d");
  certify_cmd->add_flag("--random", config.random, "Draw points with distinct pairwise sums");
  certify_cmd->add_option("--seed", config.seed, "Seed, list 1,2,3 or range 1..10 (with --random)");
  certify_cmd->add_option("--bound", config.bound, "Random points lie in [-bound, bound]");
  certify_cmd->add_option("--field", config.field, "q or p=<prime>");
  certify_cmd->add_flag("--json", config.json, "JSON report");
  certify_cmd->add_option("--degree-bound", config.degree_bound, "Largest Hilbert-function window");
  certify_cmd->add_option("--step-cap", config.step_cap, "Saturation colon-step cap");
  certify_cmd->add_option("--jobs", config.jobs, "Parallel runs for seed batches");

  bool example_json = false;
  auto* example_cmd = app.add_subcommand("example", "Reproduce the d = 4 example with points 0,1,2,3");
  example_cmd->add_flag("--json", example_json, "JSON report");

  long max_d = 10;
  auto* catalan_cmd = app.add_subcommand("catalan", "Tabulate the constants c_d");
  catalan_cmd->add_option("--max-d", max_d, "Largest d");

  std::string order = "grevlex";
  std::vector<std::string> files;
  std::string gb_field = "q";
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of polynomial list files");
  gb_cmd->add_option("--order", order, "lex, grevlex or weight(a,b,c,d)");
  gb_cmd->add_option("--field", gb_field, "q or p=<prime>");
  gb_cmd->add_option("files", files, "Files with comma/newline separated polynomials")->required();

  std::string ideal_text;
  std::string ideal_file;
  std::string hilbert_field = "q";
  long hilbert_values = 10;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series and polynomial of a homogeneous ideal");
  hilbert_cmd->add_option("--ideal", ideal_text, "Generators, comma separated");
  hilbert_cmd->add_option("--file", ideal_file, "File with generators");
  hilbert_cmd->add_option("--field", hilbert_field, "q or p=<prime>");
  hilbert_cmd->add_option("--values", hilbert_values, "Print H(n) for n = 0..values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*certify_cmd) return cmd_certify(config);
    if (*example_cmd) return cmd_example(example_json);
    if (*catalan_cmd) return cmd_catalan(max_d);
    if (*gb_cmd) return cmd_gb(order, files, gb_field);
    if (*hilbert_cmd) return cmd_hilbert(ideal_text, ideal_file, hilbert_field, hilbert_values);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
