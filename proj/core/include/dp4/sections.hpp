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
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp4/linalg.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/point_config.hpp"

namespace dp4 {

/// Variables of the affine chart: x, y.
const VarTablePtr& plane_vars();
/// Chart plus fiber coordinates: x, y, u, v.
const VarTablePtr& chart_vars();

/// f (d/dx)^2 + g (d/dy)^2 + h (d/dx)(d/dy), with f, g, h in x, y of
/// degree at most 4. As a function on the cotangent chart it is
/// f u^2 + g v^2 + h u v.
class SymField {
 public:
  SymField();
  SymField(MPoly f, MPoly g, MPoly h);

  const MPoly& f() const { return f_; }
  const MPoly& g() const { return g_; }
  const MPoly& h() const { return h_; }

  MPoly as_function() const;

  friend SymField operator+(const SymField& a, const SymField& b);
  friend SymField operator*(const Rat& c, const SymField& a);
  friend bool operator==(const SymField& a, const SymField& b) = default;

 private:
  MPoly f_;
  MPoly g_;
  MPoly h_;
};

/// The 45 coefficients f_{i,j}, g_{i,j}, h_{i,j} with i + j <= 4. Slots run
/// over f, then g, then h; inside each by total degree, then by j.
inline constexpr std::size_t kSlotCount = 45;

struct Slot {
  char component;  // 'f', 'g' or 'h'
  unsigned i;
  unsigned j;
};

const std::array<Slot, kSlotCount>& slots();
std::size_t slot_index(char component, unsigned i, unsigned j);
std::string slot_name(std::size_t k);

RatVector to_slots(const SymField& field);
SymField from_slots(const RatVector& coeffs);

struct LinearFunctional {
  RatVector coeffs = RatVector(kSlotCount, Rat(0));
  std::string label;   // e.g. "h_{1,3} - 2 g_{0,4}" or "g_x"
  std::string source;  // "plane" or "point k"

  Rat apply(const RatVector& slot_values) const;
  Rat apply(const SymField& field) const { return apply(to_slots(field)); }
};

/// The 18 forms cutting out fields regular on the whole plane.
std::vector<LinearFunctional> p2_constraints();

/// f, g, h, g_x, f_y, g_y - h_x, f_x - h_y at (a, b), as forms in the slots.
std::vector<LinearFunctional> blowup_point_constraints(const ChartPoint& p);

struct ConstraintSystem {
  std::vector<LinearFunctional> rows;
  RatMatrix matrix() const;
  std::size_t size() const { return rows.size(); }
};

ConstraintSystem plane_system();
/// Plane forms plus the forms of the first k normalized points.
ConstraintSystem assemble_prefix_system(const PointConfig& config, std::size_t k);
/// All 53 rows.
ConstraintSystem assemble_system(const PointConfig& config);

struct SectionBasis {
  SymField H;
  SymField G;
  PointConfig config;
};

/// Canonical kernel of the system as fields.
std::vector<SymField> kernel_fields(const ConstraintSystem& system);

/// Throws KernelDimensionError unless the kernel has dimension 2, and
/// CheckFailure if a basis vector fails a row on re-evaluation.
SectionBasis kernel_basis(const ConstraintSystem& system, const PointConfig& config);
SectionBasis compute_sections(const PointConfig& config);

std::size_t section_space_dimension(const PointConfig& config, std::size_t k);

bool annihilated(const ConstraintSystem& system, const SymField& field);

/// The field written in the chart x0 != 0 expressed in the chart
/// x2 != 0 with coordinates (x0/x2, x1/x2), when it stays regular there.
std::optional<SymField> transport_to_second_chart(const SymField& field);

/// True iff the field extends regularly to the chart x2 != 0.
bool chart_transport_check(const SymField& field);

/// Exchange of x and y (x1 <-> x2).
SymField swap_xy(const SymField& field);

/// A standard chart containing the point, with the field rewritten in it.
/// Charts are tried in the order x0, x2, x1; the returned field uses the
/// variables x, y for the new affine coordinates.
std::pair<SymField, ChartPoint> field_near(const SymField& field, const ProjPoint& point);

}  // namespace dp4
