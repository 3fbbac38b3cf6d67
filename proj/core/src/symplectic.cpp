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

#include "dp4/symplectic.hpp"

#include "dp4/errors.hpp"

namespace dp4 {

MPoly poisson_R(const MPoly& H, const MPoly& G) {
  const auto d = [](const MPoly& p, const char* var) { return derivative(p, var); };
  return d(H, "y") * d(G, "v") - d(H, "v") * d(G, "y") + d(H, "x") * d(G, "u") - d(H, "u") * d(G, "x");
}

MPoly poisson_R(const SymField& H, const SymField& G) { return poisson_R(H.as_function(), G.as_function()); }

namespace {

std::array<Rat, 4> gradient(const MPoly& F, const ChartCoords& q) {
  std::array<Rat, 4> out;
  const char* names[] = {"x", "y", "u", "v"};
  for (std::size_t k = 0; k < 4; ++k) out[k] = eval(derivative(F, names[k]), std::span<const Rat>(q));
  return out;
}

}  // namespace

std::pair<ChartVector, ChartVector> hamiltonian_frame(const SymField& H, const SymField& G, const ChartCoords& q) {
  const auto gh = gradient(H.as_function(), q);
  const auto gg = gradient(G.as_function(), q);
  ChartVector A{q, {-gh[2], -gh[3], gh[0], gh[1]}};
  ChartVector B{q, {-gg[2], -gg[3], gg[0], gg[1]}};
  return {A, B};
}

Rat omega_pairing(const ChartVector& A, const ChartVector& B) {
  if (A.base != B.base) throw InputError("vectors at different base points");
  return A.c[0] * B.c[2] - A.c[2] * B.c[0] + A.c[1] * B.c[3] - A.c[3] * B.c[1];
}

Rat differential(const SymField& field, const ChartVector& X) {
  const auto g = gradient(field.as_function(), X.base);
  return g[0] * X.c[0] + g[1] * X.c[1] + g[2] * X.c[2] + g[3] * X.c[3];
}

std::vector<ChartCoords> sample_chart_points(Rng& rng, std::size_t n, const PointConfig& config) {
  const auto blown = config.chart_points();
  std::vector<ChartCoords> out;
  while (out.size() < n) {
    ChartCoords q{rng.rational(100), rng.rational(100), rng.rational(100), rng.rational(100)};
    bool clash = false;
    for (const auto& p : blown) clash = clash || (p.x == q[0] && p.y == q[1]);
    if (!clash) out.push_back(q);
  }
  return out;
}

InvolutivityCertificate certify(const SectionBasis& basis, std::uint64_t seed, std::size_t samples) {
  InvolutivityCertificate cert{basis, poisson_R(basis.H, basis.G), false, {}, true};
  cert.is_zero = cert.R.is_zero();
  Rng rng(seed);
  for (const auto& q : sample_chart_points(rng, samples, basis.config)) {
    // The sample value comes from the frame pairing, not from R itself.
    const auto [A, B] = hamiltonian_frame(basis.H, basis.G, q);
    const Rat value = omega_pairing(A, B);
    cert.samples.push_back({q, value});
    cert.samples_consistent = cert.samples_consistent && value == eval(cert.R, std::span<const Rat>(q));
  }
  return cert;
}

InvolutivityCertificate involutivity_certificate(const PointConfig& config, std::uint64_t seed, bool corrupt) {
  SectionBasis basis = compute_sections(config);
  if (corrupt) {
    RatVector s = to_slots(basis.H);
    s[slot_index('f', 0, 0)] += 1;
    basis.H = from_slots(s);
  }
  return certify(basis, seed);
}

}  // namespace dp4
