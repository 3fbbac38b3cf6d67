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
#include <string>

#include "dp4/linalg.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

/// Homogeneous plane point (x0 : x1 : x2).
using ProjPoint = std::array<Rat, 3>;

/// Point of the affine chart x0 != 0, with x = x1/x0 and y = x2/x0.
struct ChartPoint {
  Rat x;
  Rat y;
  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

bool is_zero(const ProjPoint& p);
/// Scales so that the first nonzero coordinate is 1.
ProjPoint normalized(const ProjPoint& p);
bool same_point(const ProjPoint& p, const ProjPoint& q);

Rat det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Line through two points and intersection of two lines, both via the
/// cross product.
ProjPoint cross(const ProjPoint& p, const ProjPoint& q);

ProjPoint apply(const RatMatrix& t, const ProjPoint& p);

std::optional<ChartPoint> to_chart(const ProjPoint& p);
ProjPoint from_chart(const ChartPoint& c);

std::string to_string(const ProjPoint& p);

/// Direction (e1 : e2) on the parameter line, scaled so that its first
/// nonzero entry is 1.
struct PDir {
  Rat e1;
  Rat e2;
  friend bool operator==(const PDir&, const PDir&) = default;
};

PDir make_pdir(const Rat& e1, const Rat& e2);
std::string to_string(const PDir& d);

}  // namespace dp4
