// Copyright 2026 The Authors.
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

#include <vector>

#include "submod/algorithms.h"
#include "submod/generators.h"
#include "submod/matching.h"
#include "submod/random.h"
#include "submod/solve.h"

namespace submod {
namespace {

Instance BenchInstance(benchmark::State& state) {
  RandomInstanceOptions options;
  options.rank = static_cast<int>(state.range(1));
  return RandomInstance(1, static_cast<ElementId>(state.range(0)), options);
}

void BM_SplitAndGrowDeterministic(benchmark::State& state) {
  const Instance instance = BenchInstance(state);
  std::int64_t queries = 0;
  for (auto _ : state) {
    const Oracles o = Build(instance);
    const RunReport report = SplitAndGrowDeterministic(o.f, o.m);
    queries = report.counts.value_queries;
    benchmark::DoNotOptimize(report.value);
  }
  state.counters["value_queries"] = static_cast<double>(queries);
}
BENCHMARK(BM_SplitAndGrowDeterministic)
    ->ArgsProduct({{20, 40, 80}, {4, 8}})
    ->Unit(benchmark::kMicrosecond);

void BM_ClassicalGreedy(benchmark::State& state) {
  const Instance instance = BenchInstance(state);
  for (auto _ : state) {
    const Oracles o = Build(instance);
    benchmark::DoNotOptimize(ClassicalGreedy(o.f, o.m));
  }
}
BENCHMARK(BM_ClassicalGreedy)
    ->ArgsProduct({{20, 40, 80}, {4, 8}})
    ->Unit(benchmark::kMicrosecond);

void BM_Hungarian(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  Rng rng(3);
  WeightedBipartiteGraph g(size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      g.AddEdge(i, j, rng.Between(0, 1000), i * size + j);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxWeightPerfectMatching(g).total_weight);
  }
  state.SetComplexityN(size);
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(4, 64)->Complexity();

}  // namespace
}  // namespace submod

BENCHMARK_MAIN();
