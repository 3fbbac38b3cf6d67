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

#include "dp4/point_config.hpp"

#include "dp4/errors.hpp"

namespace dp4 {

AlphaBeta branch_minus_one() { return {Rat(1), Rat(-1)}; }
AlphaBeta branch_minus_one_half() { return {Rat(1), make_rat(-1, 2)}; }

namespace {

std::array<ProjPoint, 4> frame_targets(const AlphaBeta& ab) {
  return {ProjPoint{Rat(1), Rat(0), Rat(0)}, ProjPoint{Rat(1), Rat(1), Rat(0)},
          ProjPoint{Rat(1), Rat(0), Rat(1)}, ProjPoint{Rat(1), ab.alpha, ab.beta}};
}

RatMatrix scaled_to_first_entry(const RatMatrix& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (sgn(t(i, j)) != 0) return (1 / Rat(t(i, j))) * t;
    }
  }
  throw CheckFailure("zero transform");
}

}  // namespace

std::array<ProjPoint, 5> PointConfig::normalized_points() const {
  const auto f = frame_targets(alpha_beta);
  return {f[0], f[1], f[2], f[3], ProjPoint{Rat(1), a, b}};
}

std::array<ChartPoint, 5> PointConfig::chart_points() const {
  return {ChartPoint{Rat(0), Rat(0)}, ChartPoint{Rat(1), Rat(0)}, ChartPoint{Rat(0), Rat(1)},
          ChartPoint{alpha_beta.alpha, alpha_beta.beta}, ChartPoint{a, b}};
}

PointConfig PointConfig::from_ab(const Rat& a, const Rat& b, const AlphaBeta& ab) {
  PointConfig c;
  c.alpha_beta = ab;
  c.a = a;
  c.b = b;
  c.transform = RatMatrix::identity(3);
  c.raw_points = c.normalized_points();
  check_general_position(c.raw_points);
  return c;
}

void check_general_position(std::span<const ProjPoint> points) {
  for (const auto& p : points) {
    if (is_zero(p)) throw InputError("the zero vector is not a projective point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (same_point(points[i], points[j])) {
        throw InputError("points not distinct (p" + std::to_string(i + 1) + " = p" + std::to_string(j + 1) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (collinear(points[i], points[j], points[k])) {
          throw InputError("general position violated (p" + std::to_string(i + 1) + ", p" + std::to_string(j + 1) +
                           ", p" + std::to_string(k + 1) + " collinear)");
        }
      }
    }
  }
}

RatMatrix frame_matrix(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4) {
  RatMatrix cols(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    cols(i, 0) = p1[i];
    cols(i, 1) = p2[i];
    cols(i, 2) = p3[i];
  }
  const auto lambda = solve(cols, RatVector{p4[0], p4[1], p4[2]});
  if (!lambda) throw InputError("general position violated (frame points collinear)");
  for (std::size_t j = 0; j < 3; ++j) {
    if (sgn((*lambda)[j]) == 0) throw InputError("general position violated (frame points collinear)");
    for (std::size_t i = 0; i < 3; ++i) cols(i, j) *= (*lambda)[j];
  }
  return cols;
}

PointConfig normalize_config(const std::array<ProjPoint, 5>& points) {
  check_general_position(points);
  const AlphaBeta ab = branch_minus_one();
  const auto tgt = frame_targets(ab);
  const RatMatrix to_target = frame_matrix(tgt[0], tgt[1], tgt[2], tgt[3]);

  for (const auto& order : {std::array<std::size_t, 5>{0, 1, 2, 3, 4}, std::array<std::size_t, 5>{0, 1, 2, 4, 3}}) {
    const RatMatrix src =
        frame_matrix(points[order[0]], points[order[1]], points[order[2]], points[order[3]]);
    const RatMatrix t = scaled_to_first_entry(to_target * *inverse(src));
    const ProjPoint fifth = apply(t, points[order[4]]);
    const auto chart = to_chart(fifth);
    if (!chart) continue;

    PointConfig c;
    c.raw_points = points;
    c.transform = t;
    c.order = order;
    c.alpha_beta = ab;
    c.a = chart->x;
    c.b = chart->y;
    const auto norm = c.normalized_points();
    for (std::size_t k = 0; k < 5; ++k) {
      if (!same_point(apply(t, points[order[k]]), norm[k])) {
        throw CheckFailure("normalization does not reproduce the frame");
      }
    }
    return c;
  }
  // Both orders put a point at infinity only if b^2 + b + 1 = 0.
  throw CheckFailure("normalization left the fifth point at infinity");
}

}  // namespace dp4
