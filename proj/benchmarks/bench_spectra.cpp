// Copyright 2026 The trilsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "trilsd/ensembles.hpp"
#include "trilsd/spectra.hpp"

namespace trilsd {
namespace {

void BM_BuildTriangular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_triangular(PatternKind::Toeplitz, n, InputDistribution::StandardGaussian, seed++));
  }
}
BENCHMARK(BM_BuildTriangular)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixDraw d = build_triangular(PatternKind::Wigner, n, InputDistribution::StandardGaussian, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_spectrum(d));
}
BENCHMARK(BM_Eigenvalues)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace trilsd
