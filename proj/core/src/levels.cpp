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

#include "dp4/levels.hpp"

#include <algorithm>
#include <limits>

#include "dp4/errors.hpp"
#include "dp4/linalg.hpp"

namespace dp4 {

BinaryQuadric restrict_field(const SymField& field, const ChartPoint& p) {
  const std::array<Rat, 2> at{p.x, p.y};
  return {eval(field.f(), std::span<const Rat>(at)), eval(field.g(), std::span<const Rat>(at)),
          eval(field.h(), std::span<const Rat>(at))};
}

namespace {

BinaryQuadric member(const BinaryQuadric& h0, const BinaryQuadric& g0, const Rat& e1, const Rat& e2) {
  return {e2 * h0.uu - e1 * g0.uu, e2 * h0.vv - e1 * g0.vv, e2 * h0.uv - e1 * g0.uv};
}

}  // namespace

BinaryQuadric restrict_at_point(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ChartPoint& x0) {
  return member(restrict_field(basis.H, x0), restrict_field(basis.G, x0), e1, e2);
}

// ---------------------------------------------------------------- surds

namespace {

Int common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.D;
  if (y.is_rational()) return x.D;
  if (x.D != y.D) throw CheckFailure("surds with different radicands");
  return x.D;
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Int d = common_radicand(x, y);
  QuadraticSurd r{x.a + y.a, x.b + y.b, d};
  if (r.is_rational()) r.D = 0;
  return r;
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Int d = common_radicand(x, y);
  QuadraticSurd r{x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d};
  if (r.is_rational()) r.D = 0;
  return r;
}

QuadraticSurd operator*(const Rat& c, const QuadraticSurd& x) {
  QuadraticSurd r{c * x.a, c * x.b, x.D};
  if (r.is_rational()) r.D = 0;
  return r;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  // D is never a perfect square, so 1 and sqrt(D) are independent over Q.
  return x.a == y.a && x.b == y.b && (x.is_rational() || x.D == y.D);
}

QuadraticSurd QuadraticSurd::inverse() const {
  const Rat norm = a * a - b * b * Rat(D);
  if (sgn(norm) == 0) throw CheckFailure("inverse of zero");
  return (1 / norm) * conjugate();
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return dp4::to_string(a);
  return dp4::to_string(a) + " + " + dp4::to_string(b) + " * sqrt(" + D.get_str() + ")";
}

std::string to_string(FiberStatus s) {
  switch (s) {
    case FiberStatus::four_points: return "four_points";
    case FiberStatus::two_double: return "two_double";
    case FiberStatus::double_double: return "double_double";
    case FiberStatus::whole_line: return "whole_line";
    case FiberStatus::other_degenerate: return "other-degenerate";
  }
  return "other-degenerate";
}

// ---------------------------------------------------------------- fibers

namespace {

FiberReport solve_fiber(const BinaryQuadric& h0, const BinaryQuadric& g0, const Rat& e1, const Rat& e2,
                        const ChartPoint& base) {
  if (sgn(e1) == 0 && sgn(e2) == 0) throw InputError("direction e = (0, 0)");
  FiberReport rep;
  rep.base = base;
  rep.e1 = e1;
  rep.e2 = e2;
  rep.member = member(h0, g0, e1, e2);
  rep.discriminant = rep.member.discriminant();
  if (rep.member.is_zero()) {
    rep.status = FiberStatus::whole_line;
    return rep;
  }
  const BinaryQuadric& q = rep.member;
  const Rat& disc = rep.discriminant;

  auto finite_root = [](QuadraticSurd t, unsigned mult) {
    FiberRoot r;
    r.t = std::move(t);
    r.multiplicity = mult;
    return r;
  };
  if (sgn(q.uu) != 0) {
    const Rat centre = -q.uv / (2 * q.uu);
    if (sgn(disc) == 0) {
      rep.roots.push_back(finite_root(QuadraticSurd::rational(centre), 2));
    } else if (auto root = rational_sqrt(disc)) {
      const Rat half = *root / (2 * q.uu);
      rep.roots.push_back(finite_root(QuadraticSurd::rational(centre - half), 1));
      rep.roots.push_back(finite_root(QuadraticSurd::rational(centre + half), 1));
    } else {
      // sqrt(n/d) = sqrt(n d) / d.
      const Int D = disc.get_num() * disc.get_den();
      const Rat coeff = 1 / (2 * q.uu * Rat(disc.get_den()));
      rep.roots.push_back(finite_root({centre, -coeff, D}, 1));
      rep.roots.push_back(finite_root({centre, coeff, D}, 1));
    }
  } else {
    FiberRoot inf;
    inf.at_infinity = true;
    if (sgn(q.uv) != 0) {
      rep.roots.push_back(inf);
      rep.roots.push_back(finite_root(QuadraticSurd::rational(-q.vv / q.uv), 1));
    } else {
      inf.multiplicity = 2;
      rep.roots.push_back(inf);
    }
  }

  bool all_kappa = true;
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    FiberRoot& r = rep.roots[k];
    const BinaryQuadric& src = sgn(e1) != 0 ? h0 : g0;
    const Rat& scale = sgn(e1) != 0 ? e1 : e2;
    QuadraticSurd value;
    if (r.at_infinity) {
      value = QuadraticSurd::rational(src.uu);
    } else {
      value = src.uu * (r.t * r.t) + src.uv * r.t + QuadraticSurd::rational(src.vv);
    }
    r.kappa = (1 / scale) * value;
    if (r.kappa.is_zero()) {
      all_kappa = false;
      continue;
    }
    r.s_squared = r.kappa.inverse();
    const std::string label = "r" + std::to_string(k + 1);
    rep.involution_pairs.emplace_back(label + "+", label + "-");
    rep.solution_count += 2 * r.multiplicity;
  }
  if (rep.roots.size() == 2) {
    rep.status = all_kappa ? FiberStatus::four_points : FiberStatus::other_degenerate;
  } else {
    rep.status = all_kappa ? FiberStatus::two_double : FiberStatus::double_double;
  }
  return rep;
}

}  // namespace

FiberReport fiber_count(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ChartPoint& x0) {
  for (const auto& p : basis.config.chart_points()) {
    if (p == x0) throw InputError("x0 is a blown-up point and is not in the chart");
  }
  return solve_fiber(restrict_field(basis.H, x0), restrict_field(basis.G, x0), e1, e2, x0);
}

bool off_line_locus(const PointConfig& config, const ProjPoint& x0) {
  const auto pts = config.normalized_points();
  for (std::size_t i = 0; i < 5; ++i) {
    if (same_point(pts[i], x0)) return false;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (collinear(pts[i], pts[j], x0)) return false;
    }
  }
  auto conic_row = [](const ProjPoint& p) {
    return RatVector{p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
  };
  RatMatrix sys(0, 6);
  for (const auto& p : pts) sys.append_row(conic_row(p));
  const RatVector conic = kernel(sys).at(0);
  const RatVector row = conic_row(x0);
  Rat value = 0;
  for (std::size_t k = 0; k < 6; ++k) value += conic[k] * row[k];
  return sgn(value) != 0;
}

FiberReport fiber_count_at(const SectionBasis& basis, const Rat& e1, const Rat& e2, const ProjPoint& x0) {
  for (const auto& p : basis.config.normalized_points()) {
    if (same_point(p, x0)) throw InputError("x0 is a blown-up point and is not in the chart");
  }
  const auto [h, cp] = field_near(basis.H, x0);
  const auto [g, cp2] = field_near(basis.G, x0);
  return solve_fiber(restrict_field(h, cp), restrict_field(g, cp), e1, e2, cp);
}

// ---------------------------------------------------------------- discriminant

MPoly chart_discriminant(const SectionBasis& basis, const Rat& e1, const Rat& e2) {
  const MPoly a = e2 * basis.H.f() - e1 * basis.G.f();
  const MPoly b = e2 * basis.H.g() - e1 * basis.G.g();
  const MPoly c = e2 * basis.H.h() - e1 * basis.G.h();
  return binary_quadratic_discriminant(a, c, b);
}

MPoly chart_discriminant_generic(const SectionBasis& basis) {
  static const VarTablePtr t = VarTable::make({"x", "y", "e1", "e2"});
  const MPoly e1 = MPoly::variable(t, "e1");
  const MPoly e2 = MPoly::variable(t, "e2");
  const auto lift = [](const MPoly& p) { return embed(p, t); };
  const MPoly a = e2 * lift(basis.H.f()) - e1 * lift(basis.G.f());
  const MPoly b = e2 * lift(basis.H.g()) - e1 * lift(basis.G.g());
  const MPoly c = e2 * lift(basis.H.h()) - e1 * lift(basis.G.h());
  return binary_quadratic_discriminant(a, c, b);
}

int vanishing_order(const MPoly& p, const ChartPoint& at) {
  if (p.is_zero()) return -1;
  const VarTablePtr& vars = p.vars();
  const MPoly shifted = substitute(p, {{"x", MPoly::variable(vars, "x") + MPoly::constant(vars, at.x)},
                                       {"y", MPoly::variable(vars, "y") + MPoly::constant(vars, at.y)}});
  int low = std::numeric_limits<int>::max();
  for (const auto& [e, c] : shifted.terms()) low = std::min(low, static_cast<int>(total_degree(e)));
  return low;
}

// ---------------------------------------------------------------- special directions

std::vector<Node> chart_nodes(const PointConfig& config) {
  const auto pts = config.normalized_points();
  std::vector<Node> out;
  for (int i = 1; i <= 5; ++i) {
    std::array<int, 4> others{};
    int n = 0;
    for (int k = 1; k <= 5; ++k) {
      if (k != i) others[n++] = k;
    }
    for (const auto& pr : pairings(others)) {
      const ProjPoint l1 = cross(pts[pr[0][0] - 1], pts[pr[0][1] - 1]);
      const ProjPoint l2 = cross(pts[pr[1][0] - 1], pts[pr[1][1] - 1]);
      out.push_back({i, pr, normalized(cross(l1, l2))});
    }
  }
  return out;
}

namespace {

std::string node_name(const Node& n) {
  return "l" + std::to_string(n.lines[0][0]) + std::to_string(n.lines[0][1]) + " x l" + std::to_string(n.lines[1][0]) +
         std::to_string(n.lines[1][1]);
}

PDir node_direction(const SectionBasis& basis, const Node& node) {
  const auto [h, cp] = field_near(basis.H, node.point);
  const auto [g, cp2] = field_near(basis.G, node.point);
  const BinaryQuadric h0 = restrict_field(h, cp);
  const BinaryQuadric g0 = restrict_field(g, cp);
  if (h0.is_zero() && g0.is_zero()) throw CheckFailure("unexpected deeper degeneracy at node " + node_name(node));
  if (h0.is_zero()) return make_pdir(Rat(0), Rat(1));
  const std::array<Rat, 3> hv{h0.uu, h0.vv, h0.uv};
  const std::array<Rat, 3> gv{g0.uu, g0.vv, g0.uv};
  Rat lambda;
  for (std::size_t k = 0; k < 3; ++k) {
    if (sgn(hv[k]) != 0) {
      lambda = gv[k] / hv[k];
      break;
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (gv[k] != lambda * hv[k]) {
      throw CheckFailure("fiber quadrics of H and G are not proportional at node " + node_name(node));
    }
  }
  // e2 H0 - e1 G0 = 0 with G0 = lambda H0.
  return make_pdir(Rat(1), lambda);
}

}  // namespace

std::vector<SpecialDirection> special_directions(const SectionBasis& basis) {
  std::vector<SpecialDirection> out;
  for (const Node& node : chart_nodes(basis.config)) {
    const PDir d = node_direction(basis, node);
    if (out.empty() || out.back().i != node.i) {
      out.push_back({node.i, d, {node}});
      continue;
    }
    if (!(out.back().direction == d)) {
      throw CheckFailure("nodes give inconsistent ratios for i = " + std::to_string(node.i));
    }
    out.back().witnesses.push_back(node);
  }
  return out;
}

ReducibilityResult reducibility_test(const SectionBasis& basis, const Rat& e1, const Rat& e2) {
  if (sgn(e1) == 0 && sgn(e2) == 0) throw InputError("direction e = (0, 0)");
  const MPoly delta = chart_discriminant(basis, e1, e2);
  if (delta.is_zero()) return {true, delta};
  const MPoly monic_delta = delta * (1 / Rat(delta.leading_term().second));
  auto sq = perfect_square_test(monic_delta);
  return {sq.is_square, sq.sqrt};
}

// ---------------------------------------------------------------- branch model

BranchQuadrics branch_quadrics(std::span<const Rat> theta, const Rat& theta6) {
  if (theta.size() != 5) throw InputError("expected five parameters");
  std::vector<Rat> all(theta.begin(), theta.end());
  all.push_back(theta6);
  require_distinct(all);
  const upoly::Coeffs dq = upoly::derivative(upoly::from_roots(all));
  BranchQuadrics out;
  for (auto& d : out.diag) d.resize(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const Rat w = 1 / upoly::eval(dq, theta[i]);
    out.diag[0][i] = w;
    out.diag[1][i] = w * theta[i];
    out.diag[2][i] = w * theta[i] * theta[i];
  }
  return out;
}

BranchSpanReport branch_span_report(std::span<const Rat> theta, const Rat& theta6) {
  const BranchQuadrics bq = branch_quadrics(theta, theta6);
  const QuadricPencil pencil = standard_dp4_quadrics(theta);
  RatVector l1(5), l2(5);
  for (std::size_t i = 0; i < 5; ++i) {
    l1[i] = pencil.Q1(i, i);
    l2[i] = pencil.Q2(i, i);
  }
  BranchSpanReport rep;
  rep.pencil_rank = rank(RatMatrix::from_rows({bq.diag[0], bq.diag[1], l1, l2}));
  rep.three_rank = rank(RatMatrix::from_rows({bq.diag[0], bq.diag[1], bq.diag[2]}));
  rep.containment_rank = rank(RatMatrix::from_rows({bq.diag[0], bq.diag[1], bq.diag[2], l1, l2}));
  return rep;
}

Rat diagonal_value(const RatVector& diag, const std::array<Rat, 5>& y) {
  Rat acc = 0;
  for (std::size_t i = 0; i < 5; ++i) acc += diag.at(i) * y[i] * y[i];
  return acc;
}

std::vector<std::array<Rat, 5>> diagonal_model_points(std::span<const Rat> theta, long bound, std::size_t limit) {
  const QuadricPencil pencil = standard_dp4_quadrics(theta);
  RatVector w(5);
  for (std::size_t i = 0; i < 5; ++i) w[i] = pencil.Q1(i, i);
  // sum w_i (theta_i - theta_1) y_i^2 = 0 no longer involves y_1.
  RatVector c(5);
  for (std::size_t i = 0; i < 5; ++i) c[i] = w[i] * (theta[i] - theta[0]);
  std::vector<std::array<Rat, 5>> out;
  for (long y2 = 0; y2 <= bound; ++y2) {
    for (long y3 = 0; y3 <= bound; ++y3) {
      for (long y4 = 0; y4 <= bound; ++y4) {
        if (y2 == 0 && y3 == 0 && y4 == 0) continue;
        const Rat y5sq = -(c[1] * y2 * y2 + c[2] * y3 * y3 + c[3] * y4 * y4) / c[4];
        const auto y5 = rational_sqrt(y5sq);
        if (!y5) continue;
        const Rat y1sq = -(w[1] * y2 * y2 + w[2] * y3 * y3 + w[3] * y4 * y4 + w[4] * *y5 * *y5) / w[0];
        const auto y1 = rational_sqrt(y1sq);
        if (!y1) continue;
        out.push_back({*y1, Rat(y2), Rat(y3), Rat(y4), *y5});
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- cubic

namespace {

// (a, b, c) exponents of x0, x1, x2 for the ten cubic monomials.
const std::array<std::array<unsigned, 3>, 10>& cubic_monomials() {
  static const std::array<std::array<unsigned, 3>, 10> table = [] {
    std::array<std::array<unsigned, 3>, 10> t{};
    std::size_t k = 0;
    for (unsigned a = 4; a-- > 0;) {
      for (unsigned b = 4 - a; b-- > 0;) t[k++] = {a, b, 3 - a - b};
    }
    return t;
  }();
  return table;
}

Rat pw(const Rat& x, unsigned n) {
  Rat r = 1;
  for (unsigned k = 0; k < n; ++k) r *= x;
  return r;
}

RatVector value_row(const ProjPoint& p) {
  RatVector row(10);
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& m = cubic_monomials()[k];
    row[k] = pw(p[0], m[0]) * pw(p[1], m[1]) * pw(p[2], m[2]);
  }
  return row;
}

// Row of grad F(p) . q.
RatVector derivative_row(const ProjPoint& p, const ProjPoint& q) {
  RatVector row(10, Rat(0));
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& m = cubic_monomials()[k];
    for (std::size_t v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      Rat term = Rat(m[v]) * q[v];
      for (std::size_t w = 0; w < 3; ++w) term *= pw(p[w], w == v ? m[w] - 1 : m[w]);
      row[k] += term;
    }
  }
  return row;
}

MPoly chart_cubic(const RatVector& coeffs) {
  MPoly out(plane_vars());
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& m = cubic_monomials()[k];
    out.add_term({m[1], m[2]}, coeffs[k]);
  }
  return out;
}

}  // namespace

Rat eval_cubic(const RatVector& coeffs, const ProjPoint& p) {
  const RatVector row = value_row(p);
  Rat acc = 0;
  for (std::size_t k = 0; k < 10; ++k) acc += coeffs.at(k) * row[k];
  return acc;
}

EbiCubic ebi_cubic(const PointConfig& config, int i) {
  if (i < 1 || i > 5) throw InputError("cubic index must be in 1..5");
  check_general_position(config.normalized_points());
  const auto pts = config.normalized_points();
  const ProjPoint& pi = pts[static_cast<std::size_t>(i - 1)];
  RatMatrix sys(0, 10);
  for (int k = 1; k <= 5; ++k) {
    if (k == i) continue;
    const ProjPoint& pk = pts[static_cast<std::size_t>(k - 1)];
    sys.append_row(value_row(pk));
    sys.append_row(derivative_row(pk, pi));
  }
  EbiCubic out;
  out.i = i;
  const auto k8 = kernel(sys);
  out.dim_tangency = k8.size();
  for (const auto& v : k8) out.basis_tangency.push_back(chart_cubic(v));
  sys.append_row(value_row(pi));
  const auto k9 = kernel(sys);
  out.dim_through = k9.size();
  if (k9.size() == 1) {
    out.projective_coeffs = k9[0];
    out.cubic = chart_cubic(k9[0]);
  }
  return out;
}

std::vector<ProjPoint> cubic_chord_points(const RatVector& coeffs, std::vector<ProjPoint> seeds, std::size_t want) {
  std::vector<ProjPoint> pts;
  auto known = [&](const ProjPoint& p) {
    return std::any_of(pts.begin(), pts.end(), [&](const ProjPoint& q) { return same_point(p, q); });
  };
  for (auto& s : seeds) {
    if (sgn(eval_cubic(coeffs, s)) != 0) throw InputError("seed point is not on the cubic");
    if (!known(s)) pts.push_back(normalized(s));
  }
  std::vector<ProjPoint> found;
  // The restriction to the chord P Q is s t (c2 s + c1 t) when P and Q lie
  // on the curve; the third intersection is c1 P - c2 Q.
  for (std::size_t a = 0; a < pts.size() && found.size() < want; ++a) {
    for (std::size_t b = 0; b < a && found.size() < want; ++b) {
      const ProjPoint& P = pts[a];
      const ProjPoint& Q = pts[b];
      const ProjPoint plus{P[0] + Q[0], P[1] + Q[1], P[2] + Q[2]};
      const ProjPoint minus{P[0] - Q[0], P[1] - Q[1], P[2] - Q[2]};
      const Rat g1 = eval_cubic(coeffs, plus);
      const Rat gm = eval_cubic(coeffs, minus);
      const Rat c2 = (g1 - gm) / 2;
      const Rat c1 = (g1 + gm) / 2;
      if (sgn(c1) == 0 && sgn(c2) == 0) continue;
      const ProjPoint R{c1 * P[0] - c2 * Q[0], c1 * P[1] - c2 * Q[1], c1 * P[2] - c2 * Q[2]};
      if (is_zero(R) || known(R)) continue;
      pts.push_back(normalized(R));
      found.push_back(pts.back());
    }
  }
  return found;
}

// ---------------------------------------------------------------- tangency

namespace {

upoly::Coeffs restrict_to_line(const MPoly& delta, const ChartPoint& p, const ChartPoint& q) {
  static const VarTablePtr s_only = VarTable::make({"s"});
  const MPoly s = MPoly::variable(s_only, "s");
  const MPoly restricted = substitute(
      delta, {{"x", MPoly::constant(s_only, p.x) + q.x * s}, {"y", MPoly::constant(s_only, p.y) + q.y * s}});
  return upoly::from_mpoly(restricted, 0);
}

}  // namespace

std::size_t repeated_root_degree(const MPoly& delta, const ChartPoint& p, const ChartPoint& q) {
  const upoly::Coeffs d = restrict_to_line(delta, p, q);
  if (d.empty()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::max(0, upoly::degree(upoly::gcd(d, upoly::derivative(d)))));
}

TangencyReport line_tangency_check(const SectionBasis& basis, const Rat& e1, const Rat& e2, int i, int j) {
  if (i < 1 || j < 1 || i > 5 || j > 5 || i == j) throw InputError("line indices must be distinct values in 1..5");
  const auto pts = basis.config.chart_points();
  const ChartPoint& pi = pts[static_cast<std::size_t>(i - 1)];
  const ChartPoint& pj = pts[static_cast<std::size_t>(j - 1)];
  const ChartPoint dir{pj.x - pi.x, pj.y - pi.y};
  const MPoly delta = chart_discriminant(basis, e1, e2);

  TangencyReport rep;
  rep.i = i;
  rep.j = j;
  rep.restricted = restrict_to_line(delta, pi, dir);
  if (rep.restricted.empty()) throw CheckFailure("the line lies on the discriminant curve");
  // Strip the behaviour at the two blown-up points.
  upoly::Coeffs rest = rep.restricted;
  rep.order_at_pi = upoly::root_multiplicity(rest, Rat(0));
  rep.order_at_pj = upoly::root_multiplicity(rest, Rat(1));
  for (unsigned k = 0; k < rep.order_at_pi; ++k) rest = upoly::divmod(rest, {Rat(0), Rat(1)}).first;
  for (unsigned k = 0; k < rep.order_at_pj; ++k) rest = upoly::divmod(rest, {Rat(-1), Rat(1)}).first;
  const upoly::Coeffs g = upoly::gcd(rest, upoly::derivative(rest));
  rep.repeated_degree = static_cast<std::size_t>(std::max(0, upoly::degree(g)));
  if (rep.repeated_degree > 0) rep.witnesses = upoly::rational_roots(g);
  for (const Rat& s : rep.witnesses) {
    const ChartPoint w{pi.x + s * dir.x, pi.y + s * dir.y};
    rep.witness_points.push_back(w);
    const std::array<Rat, 2> at{w.x, w.y};
    rep.witnesses_on_curve = rep.witnesses_on_curve && sgn(eval(delta, std::span<const Rat>(at))) == 0;
  }
  return rep;
}

}  // namespace dp4
