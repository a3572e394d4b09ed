// Copyright 2026 The fockmix Authors
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

#include <numbers>

#include "fockmix/beamsplitter.hpp"
#include "fockmix/fock_state.hpp"
#include "fockmix/sampler.hpp"
#include "fockmix/statistics.hpp"

namespace {

using namespace fockmix;

const BeamsplitterParams kBalanced(std::numbers::pi / 4);

void BM_SectorBlock(benchmark::State& state) {
  const auto total = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sector_block(total, kBalanced));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SectorBlock)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_MatrixExponentialOracle(benchmark::State& state) {
  const auto total = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs_matrix_exponential_oracle(total, kBalanced));
}
BENCHMARK(BM_MatrixExponentialOracle)->DenseRange(4, 12, 4);

void BM_FockPair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apply_bs_fock_pair(n, n, kBalanced));
}
BENCHMARK(BM_FockPair)->Arg(1)->Arg(10)->Arg(50);

void BM_ApplyGeneralCoherent(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0));
  const std::size_t cut = 2 * coherent_cutoff(alpha);
  const auto in = product_state(coherent_amplitudes(alpha, cut), coherent_amplitudes(alpha, cut));
  for (auto _ : state) benchmark::DoNotOptimize(apply_bs_general(in, kBalanced));
  state.counters["cutoff"] = static_cast<double>(cut);
}
BENCHMARK(BM_ApplyGeneralCoherent)->Arg(1)->Arg(3)->Arg(5);

void BM_Summarize(benchmark::State& state) {
  const auto in = product_state(coherent_amplitudes(3.0, 60), coherent_amplitudes(3.0, 60));
  const auto out = apply_bs_general(in, kBalanced);
  for (auto _ : state) benchmark::DoNotOptimize(summarize(out));
}
BENCHMARK(BM_Summarize);

void BM_SampleCounts(benchmark::State& state) {
  const auto out = apply_bs_fock_pair(3, 2, kBalanced);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_counts(out, shots, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SampleCounts)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
