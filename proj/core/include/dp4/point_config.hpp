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
#include <span>
#include <string>

#include "dp4/linalg.hpp"
#include "dp4/projective.hpp"

namespace dp4 {

struct AlphaBeta {
  Rat alpha;
  Rat beta;
  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

/// The two normal forms for the fourth point.
AlphaBeta branch_minus_one();       // (1, -1)
AlphaBeta branch_minus_one_half();  // (1, -1/2)

/// Five plane points brought to the normal form
///   (1:0:0), (1:1:0), (1:0:1), (1:alpha:beta), (1:a:b)
/// by `transform`. Normalized point k is the image of raw point order[k].
struct PointConfig {
  std::array<ProjPoint, 5> raw_points;
  RatMatrix transform;
  std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
  AlphaBeta alpha_beta;
  Rat a;
  Rat b;

  std::array<ProjPoint, 5> normalized_points() const;
  std::array<ChartPoint, 5> chart_points() const;

  /// Config that is already in normal form.
  static PointConfig from_ab(const Rat& a, const Rat& b, const AlphaBeta& ab = branch_minus_one());
};

/// Throws InputError("points not distinct") or
/// InputError("general position violated").
void check_general_position(std::span<const ProjPoint> points);

/// Projective frame change to the normal form. In rational coordinates the
/// fifth point can always be kept off the line at infinity by exchanging
/// the labels of the last two points, which is recorded in `order`.
PointConfig normalize_config(const std::array<ProjPoint, 5>& points);

/// The unique (up to scale) projective map sending the standard frame
/// e0, e1, e2, e0+e1+e2 to the four given points.
RatMatrix frame_matrix(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3, const ProjPoint& p4);

}  // namespace dp4
