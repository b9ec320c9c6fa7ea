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

#include "trilsd/volume.hpp"
#include "trilsd/words.hpp"

namespace trilsd {
namespace {

void BM_CountCircuits(benchmark::State& state, PatternKind pattern) {
  const Word w = Word::parse("abcabc");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_circuits(pattern, w, n, true, {}, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_CountCircuits, wigner, PatternKind::Wigner)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK_CAPTURE(BM_CountCircuits, hankel, PatternKind::Hankel)->RangeMultiplier(2)->Range(8, 32);
BENCHMARK_CAPTURE(BM_CountCircuits, toeplitz, PatternKind::Toeplitz)->RangeMultiplier(2)->Range(8, 32);

void BM_GridHankel(benchmark::State& state) {
  const Word w = Word::parse("abcabc");
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pu_grid_hankel(w, m, true, 1));
}
BENCHMARK(BM_GridHankel)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_QwPolynomial(benchmark::State& state) {
  const auto words = enumerate_catalan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Word& w : words) benchmark::DoNotOptimize(qw_polynomial(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_QwPolynomial)->DenseRange(2, 6);

}  // namespace
}  // namespace trilsd

BENCHMARK_MAIN();
