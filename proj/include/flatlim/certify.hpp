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

// End-to-end certification of the limit of d lines on the quadric under
// the weight (d,2,1,1) degeneration.

#ifndef FLATLIM_CERTIFY_HPP
#define FLATLIM_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatlim/hilbert.hpp"
#include "flatlim/ideal.hpp"
#include "flatlim/polynomial.hpp"

namespace flatlim {

struct Verdict {
  enum class Kind { kExtremalLimit, kEmbeddedPoints, kRejected };

  Kind kind = Kind::kRejected;
  long length = 0;     // embedded length, kEmbeddedPoints only
  std::string reason;  // kRejected only
  std::string stage;   // failing pipeline stage, kRejected only

  static Verdict extremal() { return {Kind::kExtremalLimit, 0, {}, {}}; }
  static Verdict embedded(long length) { return {Kind::kEmbeddedPoints, length, {}, {}}; }
  static Verdict rejected(std::string stage, std::string reason) {
    return {Kind::kRejected, 0, std::move(reason), std::move(stage)};
  }

  /// "ExtremalLimit", "EmbeddedPoints(1)", "Rejected(<reason>)".
  std::string str() const;
  /// Process exit code: 0, 2 or 3.
  int exit_code() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// An ideal as printed in reports: its generators and its reduced basis.
struct IdealRecord {
  std::vector<Polynomial> generators;
  std::string order = "grevlex";
  std::vector<Polynomial> groebner;

  static IdealRecord of(const Ideal& ideal);
  friend bool operator==(const IdealRecord&, const IdealRecord&) = default;
};

struct InstanceRecord {
  long d = 0;
  std::string field = "QQ";
  std::vector<std::string> points;
  std::optional<std::uint64_t> seed;  // set for randomly drawn point sets
  std::optional<long> bound;
  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct HilbertRecord {
  HilbertPolynomial curve;
  HilbertPolynomial initial;
  HilbertPolynomial saturated;
  HilbertPolynomial candidate;
  long window = 0;                       // flatness checked on degrees 0..window
  std::vector<long> curve_values;        // H(R/I_C, n)
  std::vector<long> initial_values;      // H(R/in_ω(I_C), n)
  bool flat = false;
  friend bool operator==(const HilbertRecord&, const HilbertRecord&) = default;
};

struct RaoRecord {
  bool checked = false;  // only when gcd(F, G) is constant
  bool matches = false;
  std::vector<long> values;
  std::vector<long> expected;
  long total_dimension = 0;
  long shift = 0;  // deg F - 1, recorded only
  friend bool operator==(const RaoRecord&, const RaoRecord&) = default;
};

/// Identities checked along the way.
struct IdentityChecks {
  bool quadric_in_curve = false;
  bool product_m_in_curve = false;
  bool a_in_curve = false;
  bool g_vandermonde = false;
  bool initial_form_a = false;
  bool p_closed_form = false;
  bool p_divisible = false;
  bool catalan_coefficient = false;
  friend bool operator==(const IdentityChecks&, const IdentityChecks&) = default;
};

struct CertificationReport {
  InstanceRecord instance;
  bool distinct_sums = false;
  Polynomial a;
  Polynomial g;
  Polynomial b;
  Polynomial p;
  Polynomial f;
  Polynomial gcd_fg;
  IdentityChecks identities;
  IdealRecord initial_ideal;
  IdealRecord saturated_ideal;
  IdealRecord extremal_candidate;
  HilbertRecord hilbert;
  long extremal_genus = 0;  // genus of the (top-dimensional) extremal part
  long embedded_length = 0;
  std::optional<Polynomial> embedded_point;  // gcd(F, G) made primitive
  bool degenerate_path = false;
  bool rao_check = false;
  RaoRecord rao;
  std::vector<std::string> notes;
  Verdict verdict;

  friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

struct CertifyOptions {
  int step_cap = kDefaultStepCap;
  /// Upper limit for the Hilbert-function windows; exceeding it rejects
  /// the run at the stage that needed the larger window.
  long degree_bound = 64;
};

/// Runs the full pipeline. Duplicate points, degree-window overruns and
/// saturation caps give a Rejected verdict naming the stage.
CertificationReport certify(const std::vector<Scalar>& points, const CertifyOptions& options = {});

}  // namespace flatlim

#endif  // FLATLIM_CERTIFY_HPP
