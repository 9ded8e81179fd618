// Copyright 2026 The urmatch Authors.
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

#include <random>

#include "urmatch/decomposition.hpp"
#include "urmatch/matching.hpp"
#include "urmatch/oracle.hpp"
#include "urmatch/recognition.hpp"

namespace urmatch {
namespace {

// n vertices with average degree `range(1)`.
Graph bench_graph(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = n * static_cast<std::size_t>(state.range(1)) / 2;
  std::mt19937_64 rng(n * 31 + m);
  return oracle::random_graph_with_edges(n, m, rng);
}

void set_args(benchmark::internal::Benchmark* b) {
  for (int n : {100, 300, 1000}) {
    for (int degree : {2, 4, 20}) b->Args({n, degree});
  }
  b->Unit(benchmark::kMillisecond);
}

void BM_MaximumMatching(benchmark::State& state) {
  const Graph g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(maximum_matching(g));
}
BENCHMARK(BM_MaximumMatching)->Apply(set_args);

void BM_GallaiEdmonds(benchmark::State& state) {
  const Graph g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(gallai_edmonds(g));
}
BENCHMARK(BM_GallaiEdmonds)->Apply(set_args);

void BM_SomeUr(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const GallaiEdmonds ge = gallai_edmonds(g);
  for (auto _ : state) benchmark::DoNotOptimize(some_ur(g, ge));
}
BENCHMARK(BM_SomeUr)->Apply(set_args);

void BM_EveryUr(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const GallaiEdmonds ge = gallai_edmonds(g);
  for (auto _ : state) benchmark::DoNotOptimize(every_ur(g, ge));
}
BENCHMARK(BM_EveryUr)->Apply(set_args);

}  // namespace
}  // namespace urmatch

BENCHMARK_MAIN();
