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

#ifndef FLATLIM_MONOMIAL_HPP
#define FLATLIM_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "flatlim/error.hpp"

namespace flatlim {

/// Variables of the ambient ring K[x,y,z,w], in this order.
inline constexpr std::size_t kNumVars = 4;

/// Ring with one auxiliary variable t appended after w; used only for
/// elimination inside the ideal calculus.
inline constexpr std::size_t kElimVars = 5;

inline constexpr std::array<char, 5> kVarNames = {'x', 'y', 'z', 'w', 't'};

enum Var : std::size_t { kX = 0, kY = 1, kZ = 2, kW = 3, kT = 4 };

/// Power product over N variables. The cached total degree always equals
/// the exponent sum.
template <std::size_t N>
class BasicMonomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr std::size_t kVars = N;
  static constexpr unsigned kMaxExponent = std::numeric_limits<Exponent>::max();

  constexpr BasicMonomial() = default;

  explicit BasicMonomial(const std::array<unsigned, N>& exponents) {
    for (std::size_t i = 0; i < N; ++i) {
      if (exponents[i] > kMaxExponent) throw DomainError("monomial exponent overflow");
      exps_[i] = static_cast<Exponent>(exponents[i]);
      degree_ += exponents[i];
    }
  }

  static BasicMonomial var(std::size_t index, unsigned power = 1) {
    std::array<unsigned, N> e{};
    e.at(index) = power;
    return BasicMonomial(e);
  }

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  const std::array<Exponent, N>& exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const BasicMonomial& other) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const BasicMonomial& other) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend BasicMonomial operator*(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) {
      unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
      if (s > kMaxExponent) throw DomainError("monomial exponent overflow");
      r.exps_[i] = static_cast<Exponent>(s);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend BasicMonomial operator/(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) {
      if (b.exps_[i] > a.exps_[i]) throw DomainError("monomial quotient is not exact");
      r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend BasicMonomial lcm(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend BasicMonomial gcd(const BasicMonomial& a, const BasicMonomial& b) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const BasicMonomial& a, const BasicMonomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const BasicMonomial& a, const BasicMonomial& b) { return !(a == b); }

  std::string str() const {
    if (degree_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += kVarNames[i];
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto e : exps_) h = h * 1000003U + e;
    return h;
  }

 private:
  std::array<Exponent, N> exps_{};
  unsigned degree_ = 0;
};

using Monomial = BasicMonomial<kNumVars>;

/// Graded reverse lexicographic comparison with x > y > z > w (> t).
/// Returns -1, 0 or 1.
template <std::size_t N>
int grevlex_compare(const BasicMonomial<N>& a, const BasicMonomial<N>& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = N; i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace flatlim

template <std::size_t N>
struct std::hash<flatlim::BasicMonomial<N>> {
  std::size_t operator()(const flatlim::BasicMonomial<N>& m) const { return m.hash(); }
};

#endif  // FLATLIM_MONOMIAL_HPP
