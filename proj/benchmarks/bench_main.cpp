// Copyright 2026 The entcorr Authors
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

#include <array>

#include <benchmark/benchmark.h>

#include "entcorr/contour.hpp"
#include "entcorr/protocols.hpp"
#include "entcorr/scanner.hpp"
#include "entcorr/symplectic.hpp"

namespace {

using namespace entcorr;

void BM_SymplecticEigenvaluesTwoMode(benchmark::State& state) {
  const auto cm = direct_output_cm(1e3, EnvironmentParams(0.75, 7.0, 4.0, -4.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_eigenvalues(cm));
  }
}
BENCHMARK(BM_SymplecticEigenvaluesTwoMode);

void BM_PtsMinTwoModeFormula(benchmark::State& state) {
  const auto cm = direct_output_cm(1e3, EnvironmentParams(0.75, 7.0, 4.0, -4.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_mode_pts_min(cm));
  }
}
BENCHMARK(BM_PtsMinTwoModeFormula);

void BM_DirectPipeline(benchmark::State& state) {
  const EnvironmentParams env(0.75, 7.0, 4.0, -4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct_output_cm(1e6, env));
  }
}
BENCHMARK(BM_DirectPipeline);

void BM_SwapPipeline(benchmark::State& state) {
  const EnvironmentParams env(0.75, 7.0, 5.0, -5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swap_conditional_cm_pipeline(1e6, env));
  }
}
BENCHMARK(BM_SwapPipeline);

void BM_Scan(benchmark::State& state) {
  const auto spec = ScanSpec::standard(0.75, Protocol::Swap, static_cast<std::size_t>(state.range(0)));
  const auto threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(spec, threads));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Scan)->Args({201, 1})->Args({201, 4})->Args({1001, 1})->Unit(benchmark::kMillisecond);

void BM_BoundaryCurves(benchmark::State& state) {
  const auto grid = scan(ScanSpec::standard(0.9, Protocol::Direct, 401));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary_curves(grid));
  }
}
BENCHMARK(BM_BoundaryCurves)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
