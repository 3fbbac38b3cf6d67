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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dp4/linalg.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/projective.hpp"
#include "dp4/upoly.hpp"

namespace dp4 {

/// Pair of symmetric 5x5 matrices spanning a pencil of quadrics in P^4.
struct QuadricPencil {
  RatMatrix Q1;
  RatMatrix Q2;
};

/// Checks shape, symmetry and det Q1 != 0; throws InputError otherwise.
QuadricPencil make_pencil(RatMatrix q1, RatMatrix q2);

/// det(t Q1 - Q2) with no normalization and no genericity check.
upoly::Coeffs characteristic_coeffs_raw(const QuadricPencil& pencil);

/// det(t Q1 - Q2) / det Q1, i.e. the polynomial for the pencil rescaled to
/// det Q1 = 1. Throws CheckFailure("pencil not generic") on repeated roots.
upoly::Coeffs characteristic_coeffs(const QuadricPencil& pencil);
/// The same polynomial as an MPoly in the single variable t.
MPoly characteristic_polynomial(const QuadricPencil& pencil);

/// The pencil scaled by c with c^5 det Q1 = 1, when such a rational c exists.
std::optional<QuadricPencil> det_normalized(const QuadricPencil& pencil);

/// diag(P'(theta_i)^-1) and diag(P'(theta_i)^-1 theta_i), P = prod (t - theta_i).
QuadricPencil standard_dp4_quadrics(std::span<const Rat> theta);

/// Rational parameters theta with det(theta Q1 - Q2) = 0, in increasing
/// order. Throws CheckFailure when some root is irrational.
std::vector<Rat> singular_members(const QuadricPencil& pencil);

/// 5 - rank(theta Q1 - Q2).
std::size_t corank_at(const QuadricPencil& pencil, const Rat& theta);

/// p_i = (1 : theta_i : theta_i^2).
std::array<ProjPoint, 5> veronese_points(std::span<const Rat> theta);

/// Throws InputError unless the values are pairwise distinct.
void require_distinct(std::span<const Rat> values);

// ---------------------------------------------------------------- lines

/// d L + sum m_i E_i on the blow-up of the plane in five points.
struct DivisorClass {
  int d = 0;
  std::array<int, 5> m{};
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

int intersect(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass anticanonical();
std::string to_string(const DivisorClass& c);

struct NamedLine {
  std::string name;  // "C", "E1".."E5", "l12".."l45"
  DivisorClass cls;
};

/// C, E1..E5, then l_{ij} for i < j.
std::vector<NamedLine> enumerate_lines();

/// Classes a L + sum b_i E_i with |a| <= 2, |b_i| <= 1, self-intersection -1
/// and anticanonical degree 1, found by exhaustive search.
std::vector<DivisorClass> lattice_search_lines();

/// Name of the line l_{ij} (order of i, j irrelevant), 1-based.
std::string line_name(int i, int j);
const DivisorClass& line_class(const std::string& name);

struct ConicFibration {
  int i = 0;  // 1..5
  int j = 0;  // 1 or 2
  DivisorClass fiber;
  /// Each singular fiber is a pair of line names.
  std::vector<std::array<std::string, 2>> singular_fibers;
};

std::vector<ConicFibration> conic_fibrations();

/// The three ways of splitting four labels into two pairs.
std::array<std::array<std::array<int, 2>, 2>, 3> pairings(const std::array<int, 4>& labels);

// ---------------------------------------------------------------- numerology

struct ZetaNumerology {
  long zeta_cubed = 0;
  long base_sum = 0;           // sum of the 16 base-locus multiplicities
  long base_multiplicity = 0;  // each one, when the sum divides evenly
  bool evenly_divided = false;
  long euler_blowup = 0;       // 2 c2 + 2 * 16
};

ZetaNumerology zeta_numerology(long k_squared, long c2);

/// Coefficients on (zeta, L, E1..E5).
using TautClass = std::array<long, 7>;
TautClass vmrt_class(int i, int j);
bool vmrt_class_sum(int i);
bool vmrt_class_sum(const TautClass& c1, const TautClass& c2);

// ---------------------------------------------------------------- dictionary

/// Projective transformation of the parameter line.
struct Mobius {
  RatMatrix m;  // 2x2, invertible
  PDir apply(const PDir& d) const;
};

/// Maps src[k] to dst[k] for three distinct points on each side.
std::optional<Mobius> fit_mobius(std::span<const PDir> src, std::span<const PDir> dst);

/// (a, b; c, d) = [ac][bd] / ([ad][bc]) with [pq] = p.e1 q.e2 - p.e2 q.e1.
Rat cross_ratio(const PDir& a, const PDir& b, const PDir& c, const PDir& d);

struct DictionaryMatch {
  bool found = false;
  /// direction k is matched to theta[permutation[k]].
  std::array<std::size_t, 5> permutation{};
  std::optional<Mobius> map;
  /// [M d_k, (1 : theta)] for the two pairs not used in the fit.
  std::array<Rat, 2> held_out_residuals{};
  std::size_t consistent_permutations = 0;
};

/// Tries all 120 matchings, identity first, and reports the first one for
/// which the Möbius map fitted on three pairs carries the other two exactly.
DictionaryMatch basis_dictionary(std::span<const PDir> directions, std::span<const Rat> theta);

}  // namespace dp4
