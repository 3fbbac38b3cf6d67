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
#include <utility>
#include <vector>

#include "dp4/mpoly.hpp"
#include "dp4/pencil.hpp"
#include "dp4/point_config.hpp"
#include "dp4/projective.hpp"
#include "dp4/sections.hpp"
#include "dp4/upoly.hpp"

namespace dp4 {

/// uu u^2 + vv v^2 + uv u v.
struct BinaryQuadric {
  Rat uu;
  Rat vv;
  Rat uv;
  bool is_zero() const { return sgn(uu) == 0 && sgn(vv) == 0 && sgn(uv) == 0; }
  Rat discriminant() const { return uv * uv - 4 * uu * vv; }
  friend bool operator==(const BinaryQuadric&, const BinaryQuadric&) = default;
};

/// The fiber quadric of a field at a chart point.
BinaryQuadric restrict_field(const SymField& field, const ChartPoint& p);

/// e2 H(x0) - e1 G(x0).
BinaryQuadric restrict_at_point(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ChartPoint& x0);

/// a + b sqrt(D) for a fixed non-square integer D (or b = 0).
struct QuadraticSurd {
  Rat a;
  Rat b;
  Int D = 0;

  static QuadraticSurd rational(const Rat& r) { return {r, Rat(0), Int(0)}; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool is_rational() const { return sgn(b) == 0; }
  QuadraticSurd conjugate() const { return {a, -b, D}; }
  QuadraticSurd inverse() const;
  std::string to_string() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const Rat& c, const QuadraticSurd& x);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);
};

enum class FiberStatus { four_points, two_double, double_double, whole_line, other_degenerate };
std::string to_string(FiberStatus s);

struct FiberRoot {
  /// The root (u : v) = (1 : 0); otherwise (t : 1).
  bool at_infinity = false;
  QuadraticSurd t;
  unsigned multiplicity = 1;
  /// H(x0, w) = kappa e1 and G(x0, w) = kappa e2 at the root w.
  QuadraticSurd kappa;
  /// Solutions are +-s w with s^2 = 1 / kappa.
  std::optional<QuadraticSurd> s_squared;
};

struct FiberReport {
  ChartPoint base;
  Rat e1;
  Rat e2;
  FiberStatus status = FiberStatus::other_degenerate;
  BinaryQuadric member;  // e2 H(x0) - e1 G(x0)
  Rat discriminant;
  std::vector<FiberRoot> roots;
  /// Solution labels "r<k>+" / "r<k>-", paired by (u, v) -> (-u, -v).
  std::vector<std::pair<std::string, std::string>> involution_pairs;
  /// Number of solutions counted with multiplicity.
  std::size_t solution_count = 0;
};

/// Solves H = e1, G = e2 over a chart point. Throws InputError for
/// e = (0, 0) or when x0 is one of the blown-up points.
FiberReport fiber_count(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ChartPoint& x0);
/// The same at an arbitrary plane point, rewriting the fields in a
/// chart that contains it.
FiberReport fiber_count_at(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ProjPoint& x0);

/// True when x0 avoids the blown-up points, the ten lines through two of
/// them and the conic through all five; fibers over such points are smooth
/// for generic e.
bool off_line_locus(const PointConfig& config, const ProjPoint& x0);

/// (e2 h - e1 e)^2 - 4 (e2 f - e1 c)(e2 g - e1 d) for H = (f, g, h) and
/// G = (c, d, e).
MPoly chart_discriminant(const SectionBasis& basis, const Rat& e1, const Rat& e2);
/// The same with e1, e2 kept as variables (table x, y, e1, e2).
MPoly chart_discriminant_generic(const SectionBasis& basis);

/// Lowest total degree in the Taylor expansion of p (in x, y) at a point;
/// -1 for the zero polynomial.
int vanishing_order(const MPoly& p, const ChartPoint& at);

struct Node {
  int i = 0;                                // the label left out
  std::array<std::array<int, 2>, 2> lines;  // l_{ab} and l_{cd}
  ProjPoint point;
};

/// The 15 points l_{ab} ∩ l_{cd} with {a, b, c, d} = {1..5} \ {i}, three per i.
std::vector<Node> chart_nodes(const PointConfig& config);

struct SpecialDirection {
  int i = 0;
  PDir direction;
  std::vector<Node> witnesses;
};

/// At each node the fiber quadrics of H and G are proportional; the ratio
/// gives direction i. Throws CheckFailure when the three nodes of some i
/// disagree, when H and G are not proportional at a node, or when both
/// vanish there ("unexpected deeper degeneracy").
std::vector<SpecialDirection> special_directions(const SectionBasis& basis);

struct ReducibilityResult {
  bool reducible = false;
  /// Square root of the discriminant divided by its leading coefficient.
  std::optional<MPoly> sqrt;
};

/// Whether the chart discriminant is a constant times a square.
ReducibilityResult reducibility_test(const SectionBasis& basis, const Rat& e1, const Rat& e2);

// ---------------------------------------------------------------- branch model

struct BranchQuadrics {
  /// Diagonals of the three quadrics restricted to y1..y5.
  std::array<RatVector, 3> diag;
};

/// Weights 1 / Q'(theta_i), theta_i / Q'(theta_i), theta_i^2 / Q'(theta_i)
/// for Q = prod over all six values.
BranchQuadrics branch_quadrics(std::span<const Rat> theta, const Rat& theta6);

struct BranchSpanReport {
  std::size_t pencil_rank = 0;          // rank of the first two stacked on the pencil pair
  std::size_t three_rank = 0;           // rank of the three branch quadrics
  std::size_t containment_rank = 0;     // rank of the three stacked on the pencil pair
};

BranchSpanReport branch_span_report(std::span<const Rat> theta, const Rat& theta6);

/// Integer points of X (in the diagonal model of the given parameters)
/// with |y_2|, |y_3|, |y_4| <= bound, up to sign.
std::vector<std::array<Rat, 5>> diagonal_model_points(std::span<const Rat> theta, long bound, std::size_t limit);

Rat diagonal_value(const RatVector& diag, const std::array<Rat, 5>& y);

// ---------------------------------------------------------------- cubic

struct EbiCubic {
  int i = 0;
  std::size_t dim_tangency = 0;  // 8 conditions
  std::size_t dim_through = 0;   // 9 conditions
  std::vector<MPoly> basis_tangency;  // chart polynomials in x, y
  std::optional<MPoly> cubic;         // when the 9-condition space is a line
  /// Coefficients on x0^a x1^b x2^c (a + b + c = 3) of the cubic.
  RatVector projective_coeffs;
};

EbiCubic ebi_cubic(const PointConfig& config, int i);

/// Evaluation of a homogeneous cubic given by its 10 coefficients.
Rat eval_cubic(const RatVector& coeffs, const ProjPoint& p);

/// Rational points of a plane cubic from chords through known points.
std::vector<ProjPoint> cubic_chord_points(const RatVector& coeffs, std::vector<ProjPoint> seeds, std::size_t want);

// ---------------------------------------------------------------- tangency

struct TangencyReport {
  int i = 0;
  int j = 0;
  upoly::Coeffs restricted;       // Delta along p_i + s (p_j - p_i)
  unsigned order_at_pi = 0;
  unsigned order_at_pj = 0;
  std::size_t repeated_degree = 0;  // degree of gcd(D, D') after removing s = 0, 1
  std::vector<Rat> witnesses;       // rational repeated roots s
  std::vector<ChartPoint> witness_points;
  bool witnesses_on_curve = true;
};

/// Throws InputError unless 1 <= i != j <= 5.
TangencyReport line_tangency_check(const SectionBasis& basis, const Rat& e1, const Rat& e2, int i, int j);

/// Degree of gcd(D, D') for D = Delta along p + s q.
std::size_t repeated_root_degree(const MPoly& delta, const ChartPoint& p, const ChartPoint& q);

}  // namespace dp4
