// Copyright 2026 The dp4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dp4/mpoly.hpp"
#include "dp4/rational.hpp"

/// Dense univariate polynomials over Q, coefficient i multiplies t^i.
/// Every function returns trimmed vectors (no trailing zeros); the zero
/// polynomial is the empty vector.
namespace dp4::upoly {

using Coeffs = std::vector<Rat>;

void trim(Coeffs& p);
int degree(const Coeffs& p);

Coeffs from_mpoly(const MPoly& p, std::size_t var);
MPoly to_mpoly(const Coeffs& p, const VarTablePtr& vars, std::size_t var);

Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs mul(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, const Rat& c);
Coeffs derivative(const Coeffs& a);
Coeffs monic(const Coeffs& a);
Rat eval(const Coeffs& p, const Rat& t);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Coeffs& a, const Coeffs& b);

/// prod (t - r_i)
Coeffs from_roots(std::span<const Rat> roots);

/// Unique polynomial of degree < n through n points with distinct abscissae.
Coeffs interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

/// Distinct rational roots in increasing order. Uses a p-adic lift of the
/// roots modulo a small good prime followed by rational reconstruction, and
/// confirms each candidate by exact evaluation.
std::vector<Rat> rational_roots(const Coeffs& p);

/// Number of times (t - r) divides p.
unsigned root_multiplicity(const Coeffs& p, const Rat& r);

}  // namespace dp4::upoly
