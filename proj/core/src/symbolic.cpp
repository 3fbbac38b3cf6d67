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

#include "dp4/symbolic.hpp"

#include <algorithm>
#include <array>

#include "dp4/errors.hpp"
#include "dp4/symplectic.hpp"

namespace dp4 {

const VarTablePtr& symbolic_vars() {
  static const VarTablePtr t = VarTable::make({"x", "y", "u", "v", "a", "b"});
  return t;
}

const VarTablePtr& ab_vars() {
  static const VarTablePtr t = VarTable::make({"a", "b"});
  return t;
}

namespace {

using PolyMatrix = std::vector<std::vector<MPoly>>;

MPoly ab_power(unsigned i, unsigned j, const Rat& c) { return MPoly::monomial(ab_vars(), {i, j}, c); }

// The seven forms at (a, b) with polynomial coefficients, mirroring
// blowup_point_constraints.
std::vector<std::vector<MPoly>> symbolic_point_rows() {
  enum Op { kValue, kDx, kDy };
  auto functional = [](char comp, Op op) {
    std::vector<MPoly> c(kSlotCount, MPoly(ab_vars()));
    for (unsigned d = 0; d <= 4; ++d) {
      for (unsigned j = 0; j <= d; ++j) {
        const unsigned i = d - j;
        MPoly& cell = c[slot_index(comp, i, j)];
        switch (op) {
          case kValue: cell = ab_power(i, j, 1); break;
          case kDx:
            if (i > 0) cell = ab_power(i - 1, j, Rat(i));
            break;
          case kDy:
            if (j > 0) cell = ab_power(i, j - 1, Rat(j));
            break;
        }
      }
    }
    return c;
  };
  auto minus = [](std::vector<MPoly> a, const std::vector<MPoly>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
  };
  return {
      functional('f', kValue),
      functional('g', kValue),
      functional('h', kValue),
      functional('g', kDx),
      functional('f', kDy),
      minus(functional('g', kDy), functional('h', kDx)),
      minus(functional('f', kDx), functional('h', kDy)),
  };
}

MPoly det3(const PolyMatrix& m, const std::array<std::size_t, 3>& rows, const std::array<std::size_t, 3>& cols) {
  const auto& r0 = m[rows[0]];
  const auto& r1 = m[rows[1]];
  const auto& r2 = m[rows[2]];
  const auto c = cols;
  return r0[c[0]] * (r1[c[1]] * r2[c[2]] - r1[c[2]] * r2[c[1]]) -
         r0[c[1]] * (r1[c[0]] * r2[c[2]] - r1[c[2]] * r2[c[0]]) +
         r0[c[2]] * (r1[c[0]] * r2[c[1]] - r1[c[1]] * r2[c[0]]);
}

MPoly slot_monomial(std::size_t k) {
  const Slot& s = slots()[k];
  // x^i y^j times u^2, v^2 or u v.
  const std::uint32_t u = s.component == 'f' ? 2 : s.component == 'h' ? 1 : 0;
  const std::uint32_t v = s.component == 'g' ? 2 : s.component == 'h' ? 1 : 0;
  return MPoly::monomial(symbolic_vars(), {s.i, s.j, u, v, 0, 0});
}

}  // namespace

SymbolicCertificate symbolic_involutivity(const AlphaBeta& branch) {
  SymbolicCertificate cert;
  cert.branch = branch;

  // Plane and four fixed points: a numeric kernel.
  ConstraintSystem fixed = plane_system();
  const std::array<ChartPoint, 4> fixed_points{ChartPoint{0, 0}, ChartPoint{1, 0}, ChartPoint{0, 1},
                                               ChartPoint{branch.alpha, branch.beta}};
  for (const auto& p : fixed_points) {
    for (auto& lf : blowup_point_constraints(p)) fixed.rows.push_back(std::move(lf));
  }
  const auto basis = kernel(fixed.matrix());
  cert.fixed_kernel_dim = basis.size();
  const std::size_t n = basis.size();

  // The fifth point's rows restricted to that kernel.
  const auto rows = symbolic_point_rows();
  PolyMatrix m(rows.size(), std::vector<MPoly>(n, MPoly(ab_vars())));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < kSlotCount; ++k) {
        if (sgn(basis[j][k]) != 0 && !rows[r][k].is_zero()) m[r][j] += basis[j][k] * rows[r][k];
      }
    }
  }

  // Fraction-free elimination over Q[a, b], tracking which original rows
  // end up as pivot rows.
  PolyMatrix e = m;
  std::vector<std::size_t> row_id(e.size());
  for (std::size_t r = 0; r < e.size(); ++r) row_id[r] = r;
  std::vector<std::size_t> pivot_cols;
  MPoly prev = MPoly::constant(ab_vars(), 1);
  MPoly locus = MPoly::constant(ab_vars(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < e.size(); ++c) {
    std::size_t p = r;
    while (p < e.size() && e[p][c].is_zero()) ++p;
    if (p == e.size()) continue;
    std::swap(e[p], e[r]);
    std::swap(row_id[p], row_id[r]);
    for (std::size_t i = r + 1; i < e.size(); ++i) {
      for (std::size_t j = c + 1; j < n; ++j) e[i][j] = divide_exact(e[r][c] * e[i][j] - e[i][c] * e[r][j], prev);
      e[i][c] = MPoly(ab_vars());
    }
    prev = e[r][c];
    locus *= prev;
    pivot_cols.push_back(c);
    ++r;
  }
  cert.symbolic_rank = pivot_cols.size();
  cert.degeneracy_locus = primitive_part(locus);
  if (cert.symbolic_rank != 3 || n != 5) {
    throw CheckFailure("symbolic elimination left a kernel of dimension " + std::to_string(n - cert.symbolic_rank) +
                       ", expected 2");
  }

  // Kernel vectors from signed 3x3 minors of the three pivot rows.
  const std::array<std::size_t, 3> prow{row_id[0], row_id[1], row_id[2]};
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    std::array<std::size_t, 4> cols{pivot_cols[0], pivot_cols[1], pivot_cols[2], f};
    std::vector<MPoly> coeffs(n, MPoly(ab_vars()));
    for (std::size_t k = 0; k < 4; ++k) {
      std::array<std::size_t, 3> rest{};
      std::size_t t = 0;
      for (std::size_t q = 0; q < 4; ++q) {
        if (q != k) rest[t++] = cols[q];
      }
      const MPoly minor = det3(m, prow, rest);
      coeffs[cols[k]] = k % 2 == 0 ? minor : -minor;
    }
    // Back to the 45 slots.
    std::vector<MPoly> slots_vec(kSlotCount, MPoly(ab_vars()));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < kSlotCount; ++k) {
        if (sgn(basis[j][k]) != 0) slots_vec[k] += basis[j][k] * coeffs[j];
      }
    }
    cert.kernel.push_back(std::move(slots_vec));
  }

  cert.rows_vanish = true;
  for (const auto& v : cert.kernel) {
    for (const auto& row : rows) {
      MPoly acc(ab_vars());
      for (std::size_t k = 0; k < kSlotCount; ++k) {
        if (!row[k].is_zero() && !v[k].is_zero()) acc += row[k] * v[k];
      }
      cert.rows_vanish = cert.rows_vanish && acc.is_zero();
    }
    for (const auto& row : fixed.rows) {
      // Numeric rows: the kernel vectors are combinations of the fixed basis.
      MPoly acc(ab_vars());
      for (std::size_t k = 0; k < kSlotCount; ++k) {
        if (sgn(row.coeffs[k]) != 0) acc += row.coeffs[k] * v[k];
      }
      cert.rows_vanish = cert.rows_vanish && acc.is_zero();
    }
  }

  auto as_function = [](const std::vector<MPoly>& v) {
    MPoly out(symbolic_vars());
    for (std::size_t k = 0; k < kSlotCount; ++k) {
      if (!v[k].is_zero()) out += embed(v[k], symbolic_vars()) * slot_monomial(k);
    }
    return out;
  };
  cert.H = as_function(cert.kernel[0]);
  cert.G = as_function(cert.kernel[1]);
  cert.R = poisson_R(cert.H, cert.G);
  cert.is_zero = cert.R.is_zero();
  return cert;
}

std::pair<SymField, SymField> specialize_symbolic(const SymbolicCertificate& cert, const Rat& a, const Rat& b) {
  const Assignment at{{"a", a}, {"b", b}};
  const std::string where = "(a, b) = (" + to_string(a) + ", " + to_string(b) + ")";
  if (eval(cert.degeneracy_locus, at) == 0) throw CheckFailure(where + " lies on the degeneracy locus");
  std::array<RatVector, 2> vs;
  for (std::size_t t = 0; t < 2; ++t) {
    vs[t].resize(kSlotCount);
    for (std::size_t k = 0; k < kSlotCount; ++k) vs[t][k] = eval(cert.kernel[t][k], at);
  }
  if (rank(RatMatrix::from_rows({vs[0], vs[1]})) != 2) {
    throw CheckFailure(where + " drops the rank of the symbolic kernel");
  }
  return {from_slots(vs[0]), from_slots(vs[1])};
}

}  // namespace dp4
