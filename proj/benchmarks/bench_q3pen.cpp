// Copyright 2026 The q3pen Authors
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

#include "q3pen/analysis.hpp"
#include "q3pen/counting.hpp"
#include "q3pen/protocol.hpp"

namespace {

using namespace q3pen;

PriceScenario worked_example() { return PriceScenario({3, 2, 5, 4, 7, 6}, {2, 2, 5, 5, 6, 6}, 5); }

void BM_HadamardLayer(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    StateVector s(q);
    for (auto _ : state) {
        for (int j = 0; j < q; ++j) s.apply(Gate::Hadamard(j));
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * q);
}
BENCHMARK(BM_HadamardLayer)->DenseRange(12, 20, 4);

void BM_MultiControlledNot(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    StateVector s = prepare_basis(q, 0);
    const Gate g = Gate::Not(0, {on_one(1), on_zero(2), on_one(3), on_zero(4)});
    for (auto _ : state) {
        s.apply(g);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
}
BENCHMARK(BM_MultiControlledNot)->DenseRange(12, 20, 4);

void BM_Comparator(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RegisterLayout layout;
    layout.append(Register::kPriceA, d)
        .append(Register::kPriceB, d)
        .append(Register::kFlag, 1)
        .append(Register::kAncilla, comparator_ancilla_width(d));
    const Circuit c = build_comparator(d, layout);
    StateVector s(layout.num_qubits());
    for (int j = 0; j < 2 * d; ++j) s.apply(Gate::Hadamard(j));
    for (auto _ : state) {
        c.apply(s);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_Comparator)->DenseRange(1, 4);

void BM_QuantumCountWorkedExample(benchmark::State &state) {
    const auto sc = worked_example();
    CountingParams params;
    params.precision_qubits = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quantum_count(sc, params).m_hat);
}
BENCHMARK(BM_QuantumCountWorkedExample)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_Negotiation(benchmark::State &state) {
    const auto sc = worked_example();
    CountingParams params;
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_negotiation(sc, params, CodeSpec{}, seed++).trade);
}
BENCHMARK(BM_Negotiation)->Unit(benchmark::kMillisecond);

void BM_HolevoBound(benchmark::State &state) {
    const auto sc = worked_example();
    for (auto _ : state) benchmark::DoNotOptimize(holevo_bound(sc));
}
BENCHMARK(BM_HolevoBound)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
