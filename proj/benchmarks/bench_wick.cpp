// Copyright 2026 The fermispin Authors
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

#include "fermispin/configuration.hpp"
#include "fermispin/entanglement.hpp"
#include "fermispin/pair_decomposition.hpp"
#include "fermispin/runner.hpp"
#include "fermispin/wick.hpp"

namespace {

using namespace fermispin;

ExchangeMatrix random_exchange(std::size_t n) {
    return exchange_matrix(random_configuration(n, ScaledDistance(3.0), 42));
}

void BM_SpinDensityMatrix(benchmark::State &state) {
    const auto f = random_exchange(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spin_density_matrix(f));
    }
}
BENCHMARK(BM_SpinDensityMatrix)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_NormalizationTrace(benchmark::State &state) {
    const auto f = random_exchange(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalization_trace(f));
    }
}
BENCHMARK(BM_NormalizationTrace)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_Negativity(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto rho = spin_density_matrix(random_exchange(n));
    const Bipartition part(n, {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(negativity(rho, part));
    }
}
BENCHMARK(BM_Negativity)->DenseRange(2, 8)->Unit(benchmark::kMicrosecond);

void BM_FitWeights(benchmark::State &state) {
    const auto rho = spin_density_matrix(random_exchange(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_weights(rho));
    }
}
BENCHMARK(BM_FitWeights)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_Figure(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_figure(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Figure)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
