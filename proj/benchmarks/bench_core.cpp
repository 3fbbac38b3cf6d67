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

#include <benchmark/benchmark.h>

#include "dp4/levels.hpp"
#include "dp4/pencil.hpp"
#include "dp4/symbolic.hpp"
#include "dp4/symplectic.hpp"

namespace dp4 {
namespace {

std::vector<Rat> fixture_theta() { return {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(-2)}; }

PointConfig fixture() { return normalize_config(veronese_points(fixture_theta())); }

void BM_PlaneKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernel_fields(plane_system()));
}
BENCHMARK(BM_PlaneKernel)->Unit(benchmark::kMillisecond);

void BM_ComputeSections(benchmark::State& state) {
  const PointConfig c = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(compute_sections(c));
}
BENCHMARK(BM_ComputeSections)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const SectionBasis b = compute_sections(fixture());
  for (auto _ : state) benchmark::DoNotOptimize(certify(b, 1));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

void BM_SymbolicInvolutivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_involutivity(branch_minus_one()));
}
BENCHMARK(BM_SymbolicInvolutivity)->Unit(benchmark::kMillisecond);

void BM_SpecialDirections(benchmark::State& state) {
  const SectionBasis b = compute_sections(fixture());
  for (auto _ : state) benchmark::DoNotOptimize(special_directions(b));
}
BENCHMARK(BM_SpecialDirections)->Unit(benchmark::kMillisecond);

void BM_ReducibilityTest(benchmark::State& state) {
  const SectionBasis b = compute_sections(fixture());
  for (auto _ : state) benchmark::DoNotOptimize(reducibility_test(b, Rat(1), Rat(0)));
}
BENCHMARK(BM_ReducibilityTest)->Unit(benchmark::kMillisecond);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const QuadricPencil p = standard_dp4_quadrics(fixture_theta());
  for (auto _ : state) benchmark::DoNotOptimize(singular_members(p));
}
BENCHMARK(BM_CharacteristicPolynomial)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace dp4

BENCHMARK_MAIN();
