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

// Hand-rolled generators and oracles shared by the test binaries. The
// oracles use only plain Gauss-Jordan elimination, modular arithmetic and
// evaluation, never the library's elimination or derivative code.

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "dp4/linalg.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/point_config.hpp"
#include "dp4/projective.hpp"
#include "dp4/random.hpp"
#include "dp4/sections.hpp"

namespace dp4 {

inline void PrintTo(const MPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const SymField& f, std::ostream* os) {
  *os << "{f: " << f.f().to_string() << ", g: " << f.g().to_string() << ", h: " << f.h().to_string() << "}";
}
inline void PrintTo(const PDir& d, std::ostream* os) { *os << to_string(d); }

}  // namespace dp4

namespace dp4::testing {

using Rows = std::vector<std::vector<Rat>>;

// ---------------------------------------------------------------- generators

std::vector<Rat> random_theta(Rng& rng, long height = 9);
std::array<ProjPoint, 5> random_general_position(Rng& rng, long height = 9);
RatMatrix random_invertible3(Rng& rng, long height = 5);
MPoly random_mpoly(Rng& rng, const VarTablePtr& vars, std::size_t terms, unsigned max_degree, long height = 9);
SymField random_symfield(Rng& rng, long height = 9);
/// Random linear combination of the 27 fields that extend over the plane.
SymField random_plane_field(Rng& rng, long height = 9);
RatMatrix random_matrix_of_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r, long height = 5);

// ------------------------------------------------------------------- oracles

Rows to_rows(const RatMatrix& m);
/// Rank over Z/p for p = 2^61 - 1; a lower bound for the rational rank that
/// is exact unless p divides one of the relevant minors.
std::size_t rank_mod_p(const Rows& rows);
/// Null space by textbook Gauss-Jordan over Q.
Rows naive_nullspace(const Rows& rows);
std::size_t naive_rank(const Rows& rows);
/// Leibniz expansion; fine up to 6x6.
Rat leibniz_det(const Rows& rows);
/// d/dx_var p at the point, from exact interpolation of p along the
/// coordinate line through the point. Uses eval only.
Rat partial_at(const MPoly& p, std::span<const Rat> point, std::size_t var);
/// Candidates p/q from the rational root theorem, checked by evaluation.
std::vector<Rat> brute_rational_roots(const std::vector<Rat>& coeffs);
Rat cross_ratio_formula(const PDir& a, const PDir& b, const PDir& c, const PDir& d);
/// Projective map sending p1..p4 to targets t1..t4, from a 12x13 linear
/// system solved with naive_nullspace.
RatMatrix frame_oracle(const std::array<ProjPoint, 4>& from, const std::array<ProjPoint, 4>& to);

}  // namespace dp4::testing
