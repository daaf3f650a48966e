#include <benchmark/benchmark.h>

#include "factory.hpp"
#include "scalsup/automata.hpp"
#include "scalsup/conditions.hpp"

using namespace scalsup;
using namespace testing_support;

namespace {

void BM_ScalableSynthesis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = small_factory(n, n, 2, 1);
    for (auto _ : state) {
        auto rep = synthesize_scalable(m);
        benchmark::DoNotOptimize(rep.scalable_supervisor.num_states());
    }
    state.counters["agents"] = static_cast<double>(2 * n);
}

void BM_MonolithicSynthesis(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = small_factory(n, n, 2, 1);
    std::size_t states = 0;
    for (auto _ : state) {
        const auto sup = synthesize_monolithic(m);
        states = sup.num_states();
        benchmark::DoNotOptimize(states);
    }
    state.counters["agents"] = static_cast<double>(2 * n);
    state.counters["sup_states"] = static_cast<double>(states);
}

void BM_PairwiseCondition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = small_factory(n, n, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_safety_condition(m).holds);
}

void BM_DirectCondition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = small_factory(n, n, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(check_safety_condition_direct(m).holds);
}

} // namespace

BENCHMARK(BM_ScalableSynthesis)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonolithicSynthesis)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseCondition)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectCondition)->DenseRange(2, 3, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
