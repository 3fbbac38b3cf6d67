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

#include "dp4/sections.hpp"

#include "dp4/errors.hpp"

namespace dp4 {

const VarTablePtr& plane_vars() {
  static const VarTablePtr t = VarTable::make({"x", "y"});
  return t;
}

const VarTablePtr& chart_vars() {
  static const VarTablePtr t = VarTable::make({"x", "y", "u", "v"});
  return t;
}

namespace {

void require_plane_quartic(const MPoly& p, const char* what) {
  if (!(*p.vars() == *plane_vars())) throw InputError(std::string(what) + " must be a polynomial in x, y");
  if (p.total_degree() > 4) throw InputError(std::string(what) + " has degree above 4");
}

}  // namespace

SymField::SymField() : f_(plane_vars()), g_(plane_vars()), h_(plane_vars()) {}

SymField::SymField(MPoly f, MPoly g, MPoly h) : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  require_plane_quartic(f_, "f");
  require_plane_quartic(g_, "g");
  require_plane_quartic(h_, "h");
}

MPoly SymField::as_function() const {
  const auto& cv = chart_vars();
  const MPoly u = MPoly::variable(cv, "u");
  const MPoly v = MPoly::variable(cv, "v");
  return embed(f_, cv) * u * u + embed(g_, cv) * v * v + embed(h_, cv) * u * v;
}

SymField operator+(const SymField& a, const SymField& b) { return {a.f_ + b.f_, a.g_ + b.g_, a.h_ + b.h_}; }

SymField operator*(const Rat& c, const SymField& a) { return {c * a.f_, c * a.g_, c * a.h_}; }

// ---------------------------------------------------------------- slots

const std::array<Slot, kSlotCount>& slots() {
  static const std::array<Slot, kSlotCount> table = [] {
    std::array<Slot, kSlotCount> t{};
    std::size_t k = 0;
    for (char comp : {'f', 'g', 'h'}) {
      for (unsigned d = 0; d <= 4; ++d) {
        for (unsigned j = 0; j <= d; ++j) t[k++] = Slot{comp, d - j, j};
      }
    }
    return t;
  }();
  return table;
}

std::size_t slot_index(char component, unsigned i, unsigned j) {
  if (i + j > 4) throw InputError("slot degree above 4");
  std::size_t base;
  switch (component) {
    case 'f': base = 0; break;
    case 'g': base = 15; break;
    case 'h': base = 30; break;
    default: throw InputError(std::string("unknown component '") + component + "'");
  }
  const unsigned d = i + j;
  return base + d * (d + 1) / 2 + j;
}

std::string slot_name(std::size_t k) {
  const Slot& s = slots().at(k);
  return std::string(1, s.component) + "_{" + std::to_string(s.i) + "," + std::to_string(s.j) + "}";
}

RatVector to_slots(const SymField& field) {
  RatVector out(kSlotCount, Rat(0));
  const std::pair<char, const MPoly*> parts[] = {{'f', &field.f()}, {'g', &field.g()}, {'h', &field.h()}};
  for (const auto& [comp, p] : parts) {
    for (const auto& [e, c] : p->terms()) out[slot_index(comp, e[0], e[1])] = c;
  }
  return out;
}

SymField from_slots(const RatVector& coeffs) {
  if (coeffs.size() != kSlotCount) throw InputError("expected 45 slot values");
  MPoly f(plane_vars()), g(plane_vars()), h(plane_vars());
  for (std::size_t k = 0; k < kSlotCount; ++k) {
    const Slot& s = slots()[k];
    MPoly& target = s.component == 'f' ? f : s.component == 'g' ? g : h;
    target.add_term({s.i, s.j}, coeffs[k]);
  }
  return {f, g, h};
}

Rat LinearFunctional::apply(const RatVector& slot_values) const {
  Rat acc = 0;
  for (std::size_t k = 0; k < kSlotCount; ++k) {
    if (sgn(coeffs[k]) != 0) acc += coeffs[k] * slot_values.at(k);
  }
  return acc;
}

// ---------------------------------------------------------------- forms

namespace {

struct Entry {
  char comp;
  unsigned i;
  unsigned j;
  long coeff;
};

LinearFunctional plane_form(std::initializer_list<Entry> entries) {
  LinearFunctional lf;
  lf.source = "plane";
  for (const Entry& e : entries) {
    lf.coeffs[slot_index(e.comp, e.i, e.j)] += e.coeff;
    const std::string name = std::string(1, e.comp) + "_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}";
    if (lf.label.empty()) {
      lf.label = (e.coeff < 0 ? "-" : "") + name;
    } else {
      lf.label += e.coeff < 0 ? " - " : " + ";
      if (std::abs(e.coeff) != 1) lf.label += std::to_string(std::abs(e.coeff)) + " ";
      lf.label += name;
    }
  }
  return lf;
}

Rat power(const Rat& x, unsigned n) {
  Rat r = 1;
  for (unsigned k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

std::vector<LinearFunctional> p2_constraints() {
  return {
      plane_form({{'h', 0, 4, 1}}),
      plane_form({{'h', 1, 3, 1}, {'g', 0, 4, -2}}),
      plane_form({{'h', 2, 2, 1}, {'g', 1, 3, -2}}),
      plane_form({{'h', 3, 1, 1}, {'g', 2, 2, -2}}),
      plane_form({{'h', 4, 0, 1}, {'g', 3, 1, -2}}),
      plane_form({{'g', 4, 0, 1}}),
      plane_form({{'f', 0, 3, 1}}),
      plane_form({{'f', 1, 2, 1}, {'h', 0, 3, -1}}),
      plane_form({{'f', 2, 1, 1}, {'g', 0, 3, 1}, {'h', 1, 2, -1}}),
      plane_form({{'f', 3, 0, 1}, {'g', 1, 2, 1}, {'h', 2, 1, -1}}),
      plane_form({{'g', 2, 1, 1}, {'h', 3, 0, -1}}),
      plane_form({{'g', 3, 0, 1}}),
      plane_form({{'f', 0, 4, 1}}),
      plane_form({{'f', 1, 3, 1}}),
      plane_form({{'f', 2, 2, 1}, {'g', 0, 4, -1}}),
      plane_form({{'f', 3, 1, 1}, {'g', 1, 3, -1}}),
      plane_form({{'f', 4, 0, 1}, {'g', 2, 2, -1}}),
      plane_form({{'g', 3, 1, 1}}),
  };
}

std::vector<LinearFunctional> blowup_point_constraints(const ChartPoint& p) {
  // Each form is a combination of value and first-derivative functionals
  // of the components at p.
  enum Op { kValue, kDx, kDy };
  auto functional = [&](char comp, Op op) {
    RatVector c(kSlotCount, Rat(0));
    for (unsigned d = 0; d <= 4; ++d) {
      for (unsigned j = 0; j <= d; ++j) {
        const unsigned i = d - j;
        Rat val;
        switch (op) {
          case kValue: val = power(p.x, i) * power(p.y, j); break;
          case kDx: val = i == 0 ? Rat(0) : Rat(i) * power(p.x, i - 1) * power(p.y, j); break;
          case kDy: val = j == 0 ? Rat(0) : Rat(j) * power(p.x, i) * power(p.y, j - 1); break;
        }
        c[slot_index(comp, i, j)] = val;
      }
    }
    return c;
  };
  auto make = [](std::string label, RatVector a, const RatVector* b = nullptr) {
    LinearFunctional lf;
    lf.label = std::move(label);
    lf.coeffs = std::move(a);
    if (b) {
      for (std::size_t k = 0; k < kSlotCount; ++k) lf.coeffs[k] -= (*b)[k];
    }
    return lf;
  };
  const RatVector hx = functional('h', kDx);
  const RatVector hy = functional('h', kDy);
  return {
      make("f", functional('f', kValue)),
      make("g", functional('g', kValue)),
      make("h", functional('h', kValue)),
      make("g_x", functional('g', kDx)),
      make("f_y", functional('f', kDy)),
      make("g_y - h_x", functional('g', kDy), &hx),
      make("f_x - h_y", functional('f', kDx), &hy),
  };
}

RatMatrix ConstraintSystem::matrix() const {
  RatMatrix m(0, kSlotCount);
  for (const auto& r : rows) m.append_row(r.coeffs);
  return m;
}

ConstraintSystem plane_system() { return {p2_constraints()}; }

ConstraintSystem assemble_prefix_system(const PointConfig& config, std::size_t k) {
  if (k > 5) throw InputError("at most five points");
  check_general_position(config.normalized_points());
  ConstraintSystem sys = plane_system();
  const auto pts = config.chart_points();
  for (std::size_t n = 0; n < k; ++n) {
    for (auto& lf : blowup_point_constraints(pts[n])) {
      lf.source = "point " + std::to_string(n + 1);
      sys.rows.push_back(std::move(lf));
    }
  }
  return sys;
}

ConstraintSystem assemble_system(const PointConfig& config) { return assemble_prefix_system(config, 5); }

std::vector<SymField> kernel_fields(const ConstraintSystem& system) {
  std::vector<SymField> out;
  for (const auto& v : kernel(system.matrix())) out.push_back(from_slots(v));
  return out;
}

bool annihilated(const ConstraintSystem& system, const SymField& field) {
  const RatVector s = to_slots(field);
  for (const auto& r : system.rows) {
    if (sgn(r.apply(s)) != 0) return false;
  }
  return true;
}

SectionBasis kernel_basis(const ConstraintSystem& system, const PointConfig& config) {
  auto fields = kernel_fields(system);
  if (fields.size() != 2) throw KernelDimensionError(2, fields.size());
  for (const auto& f : fields) {
    if (!annihilated(system, f)) throw CheckFailure("kernel vector fails a constraint row");
  }
  return {fields[0], fields[1], config};
}

SectionBasis compute_sections(const PointConfig& config) { return kernel_basis(assemble_system(config), config); }

std::size_t section_space_dimension(const PointConfig& config, std::size_t k) {
  const RatMatrix m = assemble_prefix_system(config, k).matrix();
  return kSlotCount - rank(m);
}

// ---------------------------------------------------------------- charts

namespace {

// In the chart x2 != 0 with X = x0/x2, Y = x1/x2 one has x = Y/X, y = 1/X,
// d/dx = X d/dY and d/dy = -X^2 d/dX - X Y d/dY. A quartic p becomes
// p~ / X^4 with p~ = sum p_ij Y^i X^(4-i-j).
MPoly tilde(const MPoly& p) {
  MPoly out(plane_vars());
  for (const auto& [e, c] : p.terms()) out.add_term({4 - e[0] - e[1], e[0]}, c);
  return out;
}

std::optional<MPoly> divide_by_x_power(const MPoly& p, unsigned k) {
  MPoly out(plane_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < k) return std::nullopt;
    out.add_term({e[0] - k, e[1]}, c);
  }
  return out;
}

}  // namespace

std::optional<SymField> transport_to_second_chart(const SymField& field) {
  const MPoly Y = MPoly::variable(plane_vars(), "y");
  const MPoly ft = tilde(field.f());
  const MPoly gt = tilde(field.g());
  const MPoly ht = tilde(field.h());
  // Coefficients of dX^2, dY^2, dX dY.
  const MPoly cxx = gt;
  const auto cyy = divide_by_x_power(ft + gt * Y * Y - ht * Y, 2);
  const auto cxy = divide_by_x_power(Rat(2) * gt * Y - ht, 1);
  if (!cyy || !cxy) return std::nullopt;
  if (cxx.total_degree() > 4 || cyy->total_degree() > 4 || cxy->total_degree() > 4) return std::nullopt;
  return SymField(cxx, *cyy, *cxy);
}

bool chart_transport_check(const SymField& field) { return transport_to_second_chart(field).has_value(); }

SymField swap_xy(const SymField& field) {
  const auto swap = [](const MPoly& p) {
    MPoly out(plane_vars());
    for (const auto& [e, c] : p.terms()) out.add_term({e[1], e[0]}, c);
    return out;
  };
  return {swap(field.g()), swap(field.f()), swap(field.h())};
}

std::pair<SymField, ChartPoint> field_near(const SymField& field, const ProjPoint& point) {
  if (is_zero(point)) throw InputError("the zero vector is not a projective point");
  if (sgn(point[0]) != 0) return {field, *to_chart(point)};
  if (sgn(point[2]) != 0) {
    auto moved = transport_to_second_chart(field);
    if (!moved) throw CheckFailure("field is not regular along the line at infinity");
    return {*moved, ChartPoint{point[0] / point[2], point[1] / point[2]}};
  }
  // (0 : 1 : 0): exchange x1 and x2 first.
  auto moved = transport_to_second_chart(swap_xy(field));
  if (!moved) throw CheckFailure("field is not regular along the line at infinity");
  return {*moved, ChartPoint{point[0] / point[1], point[2] / point[1]}};
}

}  // namespace dp4
