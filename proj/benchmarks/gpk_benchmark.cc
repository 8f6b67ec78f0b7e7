// Copyright 2026 The gpk Authors
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

#include <vector>

#include "benchmark/benchmark.h"

#include "gpk/f2.h"
#include "gpk/gpk.h"
#include "gpk/oracle.h"
#include "gpk/rng.h"
#include "gpk/statevector.h"

using namespace gpk;

namespace {

BooleanFunction random_table(size_t n, size_t m, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<uint32_t> out(size_t{1} << n);
    for (auto &v : out) {
        v = static_cast<uint32_t>(rng.bits(m));
    }
    return BooleanFunction::truth_table(n, m, std::move(out));
}

void BM_WalshHadamard(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    std::vector<double> v(size_t{1} << n, 1.0);
    for (auto _ : state) {
        walsh_hadamard(std::span<double>(v));
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(v.size()));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(10, 22, 4);

void BM_ApplyH(benchmark::State &state) {
    const size_t q = static_cast<size_t>(state.range(0));
    StateVector s(q);
    for (auto _ : state) {
        apply_h(s, all_qubits(s));
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ApplyH)->DenseRange(8, 20, 4);

void BM_ApplyOracle(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    const size_t m = 4;
    auto f = random_table(n, m, 1);
    StateVector s(n + m);
    apply_h(s, all_qubits(s));
    for (auto _ : state) {
        apply_oracle(s, f);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_ApplyOracle)->DenseRange(8, 16, 4);

void BM_GpkRun(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    const auto backend = state.range(1) ? BackendChoice::Compact : BackendChoice::Full;
    const size_t m = 4;
    auto f = random_table(n, m, 2);
    const BitString marker(m, 0b1011);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gpk_run(f, marker, backend, seed++));
    }
    state.SetLabel(state.range(1) ? "compact" : "full");
}
BENCHMARK(BM_GpkRun)->ArgsProduct({{6, 10, 14, 18}, {0, 1}});

void BM_SolveF2(benchmark::State &state) {
    const size_t m = static_cast<size_t>(state.range(0));
    SplitMix64 rng(3);
    F2LinearSystem system(m);
    for (size_t i = 0; i < m; i++) {
        system.add(BitString(m, static_cast<uint32_t>(rng.bits(m))), rng.bits(1) != 0);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_f2(system));
    }
}
BENCHMARK(BM_SolveF2)->DenseRange(4, 28, 8);

}  // namespace

BENCHMARK_MAIN();
