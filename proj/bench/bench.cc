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


// Serial reference vs OpenMP kernels. Each benchmark takes (size, mode) with
// mode 0 serial and 1 parallel.

#include <benchmark/benchmark.h>

#include "multipath/activities.h"
#include "multipath/diagram.h"
#include "multipath/oracle.h"
#include "multipath/tutte_dp.h"
#include "support/corpus.h"

namespace mp = multipath;

namespace {

using multipath::testing::whirl;

mp::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? mp::Execution::kSerial
                             : mp::Execution::kParallel;
}

void BM_SubsetExpansion(benchmark::State& state) {
  const auto sys = mp::oracle::to_set_system(whirl(state.range(0) / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp::oracle::tutte_subset_expansion(sys, mode(state)));
  }
}
BENCHMARK(BM_SubsetExpansion)
    ->ArgsProduct({{16, 20}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_LevelSweep(benchmark::State& state) {
  const auto d = mp::build_diagram(whirl(state.range(0) / 2), 1);
  const auto g = mp::build_computation_graph(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp::tutte_from_graph(g, mode(state)));
  }
  state.counters["vertices"] = static_cast<double>(g.size());
}
BENCHMARK(BM_LevelSweep)
    ->ArgsProduct({{80, 160, 320}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_Gamma(benchmark::State& state) {
  const auto d = mp::build_diagram(whirl(state.range(0) / 2), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp::compute_gamma(d, mode(state)));
  }
}
BENCHMARK(BM_Gamma)
    ->ArgsProduct({{40, 80}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_ActivityPolynomial(benchmark::State& state) {
  const auto d = mp::build_diagram(whirl(state.range(0) / 2), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp::activity_polynomial(d, mode(state)));
  }
}
BENCHMARK(BM_ActivityPolynomial)
    ->ArgsProduct({{80, 160}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
