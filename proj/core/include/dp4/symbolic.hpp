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

#include <utility>
#include <vector>

#include "dp4/mpoly.hpp"
#include "dp4/point_config.hpp"
#include "dp4/sections.hpp"

namespace dp4 {

/// Variables x, y, u, v, a, b.
const VarTablePtr& symbolic_vars();
/// Variables a, b.
const VarTablePtr& ab_vars();

/// Sections for the fifth point (1 : a : b) with a, b left symbolic, and
/// the bracket R computed over Q[x, y, u, v, a, b].
struct SymbolicCertificate {
  AlphaBeta branch;
  std::size_t fixed_kernel_dim = 0;  // kernel after the four fixed points
  std::size_t symbolic_rank = 0;     // rank over Q(a, b) of the fifth point's rows
  /// Kernel vectors over Q[a, b] in the 45 slots.
  std::vector<std::vector<MPoly>> kernel;
  MPoly H = MPoly(symbolic_vars());
  MPoly G = MPoly(symbolic_vars());
  MPoly R = MPoly(symbolic_vars());
  bool is_zero = false;
  /// Product of the fraction-free pivots, content-free.
  MPoly degeneracy_locus = MPoly(ab_vars());
  /// Kernel vectors re-checked against all seven symbolic rows.
  bool rows_vanish = false;
};

/// Throws CheckFailure when elimination over Q(a, b) does not leave a
/// two-dimensional kernel.
SymbolicCertificate symbolic_involutivity(const AlphaBeta& branch);

/// The two kernel fields at a rational (a, b); throws CheckFailure when
/// (a, b) lies on the degeneracy locus.
std::pair<SymField, SymField> specialize_symbolic(const SymbolicCertificate& cert, const Rat& a, const Rat& b);

}  // namespace dp4
