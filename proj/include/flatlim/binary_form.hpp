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

#ifndef FLATLIM_BINARY_FORM_HPP
#define FLATLIM_BINARY_FORM_HPP

#include "flatlim/polynomial.hpp"

namespace flatlim {

/// True for a homogeneous polynomial (or zero) involving only z and w.
bool is_binary_form(const Polynomial& f);

/// Monic gcd of two binary forms in z, w. A common zero in P^1 over the
/// algebraic closure exists iff the result is nonconstant.
///
/// Computed by dehomogenizing at w = 1, running Euclid over the ground
/// field, rehomogenizing, and restoring the common power of w that the
/// dehomogenization drops.
Polynomial binary_form_gcd(const Polynomial& f, const Polynomial& g);

}  // namespace flatlim

#endif  // FLATLIM_BINARY_FORM_HPP
