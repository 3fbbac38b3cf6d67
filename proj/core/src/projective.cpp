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

#include "dp4/projective.hpp"

#include "dp4/errors.hpp"

namespace dp4 {

bool is_zero(const ProjPoint& p) { return sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0; }

ProjPoint normalized(const ProjPoint& p) {
  for (const Rat& c : p) {
    if (sgn(c) != 0) {
      const Rat inv = 1 / c;
      return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
  }
  throw InputError("the zero vector is not a projective point");
}

bool same_point(const ProjPoint& p, const ProjPoint& q) { return is_zero(cross(p, q)); }

Rat det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
         p[2] * (q[0] * r[1] - q[1] * r[0]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) { return sgn(det3(p, q, r)) == 0; }

ProjPoint cross(const ProjPoint& p, const ProjPoint& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

ProjPoint apply(const RatMatrix& t, const ProjPoint& p) {
  ProjPoint out{Rat(0), Rat(0), Rat(0)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i] += t(i, j) * p[j];
  }
  return out;
}

std::optional<ChartPoint> to_chart(const ProjPoint& p) {
  if (sgn(p[0]) == 0) return std::nullopt;
  return ChartPoint{p[1] / p[0], p[2] / p[0]};
}

ProjPoint from_chart(const ChartPoint& c) { return {Rat(1), c.x, c.y}; }

std::string to_string(const ProjPoint& p) {
  return "(" + to_string(p[0]) + " : " + to_string(p[1]) + " : " + to_string(p[2]) + ")";
}

PDir make_pdir(const Rat& e1, const Rat& e2) {
  if (sgn(e1) != 0) return {Rat(1), e2 / e1};
  if (sgn(e2) != 0) return {Rat(0), Rat(1)};
  throw InputError("direction (0, 0)");
}

std::string to_string(const PDir& d) { return "(" + to_string(d.e1) + " : " + to_string(d.e2) + ")"; }

}  // namespace dp4
