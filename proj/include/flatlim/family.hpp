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

// Lines on the quadric x(x+w) - yz = 0 and the polynomials that control
// the limit of their union under the weight (d,2,1,1) degeneration.

#ifndef FLATLIM_FAMILY_HPP
#define FLATLIM_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flatlim/ideal.hpp"
#include "flatlim/polynomial.hpp"
#include "flatlim/scalar.hpp"

namespace flatlim {

/// Parameters a_1..a_d of the lines L_a; at least two, pairwise distinct.
class PointSet {
 public:
  explicit PointSet(std::vector<Scalar> values);

  /// Comma-separated integers or a/b rationals.
  static PointSet parse(std::string_view text, Field field = Field::rationals());
  static bool pairwise_distinct(const std::vector<Scalar>& values);

  std::size_t d() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  Field field() const { return values_.front().field(); }
  std::string str() const;

 private:
  std::vector<Scalar> values_;
};

enum class SumCondition { kDistinct, kColliding };

/// Small integers in [-bound, bound], redrawn until pairwise distinct and
/// (for kDistinct) with pairwise distinct sums, or (kColliding) with at
/// least one repeated sum. Deterministic in the seed.
PointSet random_points(std::size_t d, std::uint64_t seed, long bound, Field field = Field::rationals(),
                       SumCondition condition = SumCondition::kDistinct);

/// Rationals p/q with |p| <= bound, 1 <= q <= bound, distinct sums.
PointSet random_rational_points(std::size_t d, std::uint64_t seed, long bound);

/// q = x(x+w) - yz.
Polynomial quadric(Field field = Field::rationals());
/// l = x - a z.
Polynomial line_form_l(const Scalar& a);
/// m = y - a(a z + w).
Polynomial line_form_m(const Scalar& a);
/// <x - a z, y - a(a z + w)>.
Ideal line_ideal(const Scalar& a);

/// All C(d,2) sums a_i + a_j pairwise distinct.
bool distinct_sums(const std::vector<Scalar>& values);
inline bool distinct_sums(const PointSet& points) { return distinct_sums(points.values()); }

/// Intersection of the line ideals, taken in ascending parameter order.
Ideal curve_ideal(const PointSet& points);

/// A = det(l_i, m_i, m_i^2, ..., m_i^{d-1}) split along the first column as
/// A = xG - zB.
struct DeterminantSplit {
  Polynomial a;
  Polynomial g;
  Polynomial b;
};
DeterminantSplit det_A(const PointSet& points);

/// prod_{i<j} (a_i - a_j)((a_i + a_j) z + w).
Polynomial vandermonde_G(const PointSet& points);

/// V(a) = prod_{i<j} (a_j - a_i).
Scalar vandermonde(const PointSet& points);

/// The binary form with in_ω(B) = y^{d-1} P:
/// sum_j (-1)^{j-1} a_j prod_{h<k, h,k != j} (a_h - a_k)((a_h + a_k) z + w).
Polynomial poly_P(const PointSet& points);

/// det(a_i, 1, p_i, ..., p_i^{d-2}) with p_i = a_i^2 z + a_i w. Equals
/// (-1)^{C(d-1,2)} poly_P.
Polynomial poly_P_determinant(const PointSet& points);

/// F = z P.
inline Polynomial poly_F(const PointSet& points) { return Polynomial::var(kZ, points.field()) * poly_P(points); }

struct ClosedFormCheck {
  Scalar evaluated;    // determinant form of P at (z, w) = (1, -a_1 - a_2)
  Scalar closed_form;  // product formula
  bool equal = false;
};

/// Compares the determinant form of P at (1, -a_1 - a_2) with
/// (a_1 - a_2) prod_{j>=3} (a_j - a_1)(a_j - a_2)
///   prod_{3<=h<k} (a_k - a_h)(a_h + a_k - a_1 - a_2).
ClosedFormCheck check_P_closed_form(const PointSet& points);

/// z^{d-2} divides P.
bool check_P_divisible(const PointSet& points);

/// The coefficient of z^{d-2} w^{C(d-2,2)} in the determinant form of P
/// equals -c_d V(a).
bool check_P_catalan_coefficient(const PointSet& points);

/// c_d from c_2 = 1, c_d = sum_{k=1}^{d-2} (-1)^{k+1} C(d-1-k, k) c_{d-k};
/// throws Error if it disagrees with catalan_closed_form(d).
Integer catalan_c(long d);
/// C(2d-4, d-2) / (d-1), the (d-2)th Catalan number.
Integer catalan_closed_form(long d);

/// <x^2, xy, y^d, xG - y^{d-1}F> for coprime binary forms F, G with
/// deg G - deg F = d - 2; throws DomainError otherwise.
Ideal extremal_ideal(long d, const Polynomial& f, const Polynomial& g);

/// C(d-2, 2) - deg F.
long extremal_genus(long d, long deg_f);

/// in_ω(A) == xG - y^{d-1} z P for ω = (d,2,1,1).
bool check_in_A(const PointSet& points);
bool check_in_A(const PointSet& points, const DeterminantSplit& split, const Polynomial& p);

/// Integral primitive multiple with positive leading coefficient over Q;
/// monic over F_p.
Polynomial primitive_form(const Polynomial& f);

}  // namespace flatlim

#endif  // FLATLIM_FAMILY_HPP
