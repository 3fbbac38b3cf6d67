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
#include <cstdint>
#include <utility>
#include <vector>

#include "dp4/mpoly.hpp"
#include "dp4/random.hpp"
#include "dp4/sections.hpp"

namespace dp4 {

/// Values of (x, y, u, v).
using ChartCoords = std::array<Rat, 4>;

/// Coefficients on d/dx, d/dy, d/du, d/dv at a base point.
struct ChartVector {
  ChartCoords base;
  std::array<Rat, 4> c;
};

/// H_y G_v - H_v G_y + H_x G_u - H_u G_x. H and G may live over any
/// table containing x, y, u, v; the other variables ride along as
/// parameters.
MPoly poisson_R(const MPoly& H, const MPoly& G);
MPoly poisson_R(const SymField& H, const SymField& G);

/// A = (-H_u, -H_v, H_x, H_y) and B = (-G_u, -G_v, G_x, G_y) at q. Both
/// vectors are written with the same convention, which makes
/// omega(A, B) = R(q).
std::pair<ChartVector, ChartVector> hamiltonian_frame(const SymField& H, const SymField& G, const ChartCoords& q);

/// dx ^ du + dy ^ dv evaluated on (A, B).
Rat omega_pairing(const ChartVector& A, const ChartVector& B);

/// d_q F (X) for F = field as a function on the chart.
Rat differential(const SymField& field, const ChartVector& X);

struct SampleCheck {
  ChartCoords point;
  Rat value;
};

struct InvolutivityCertificate {
  SectionBasis basis;
  MPoly R;
  bool is_zero = false;
  std::vector<SampleCheck> samples;
  bool samples_consistent = false;  // every sample equals R at its point
};

/// Chart points with coordinates of height <= 100, away from the images of
/// the five blown-up points.
std::vector<ChartCoords> sample_chart_points(Rng& rng, std::size_t n, const PointConfig& config);

InvolutivityCertificate certify(const SectionBasis& basis, std::uint64_t seed, std::size_t samples = 10);

/// Computes the sections of the config and certifies them. With corrupt
/// set, the coefficient f_{0,0} of H is shifted by one first.
InvolutivityCertificate involutivity_certificate(const PointConfig& config, std::uint64_t seed, bool corrupt = false);

}  // namespace dp4
