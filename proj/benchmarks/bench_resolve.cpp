#include <benchmark/benchmark.h>

#include <vector>

#include "vlink/diagram.hpp"

using namespace vlink;

static SignedChordDiagram torus_chain(int n) {
    std::vector<ChordId> word;
    for (int k = 0; k < n; ++k) word.push_back(k);
    for (int k = 0; k < n; ++k) word.push_back(k);
    return SignedChordDiagram({word}, std::vector<int>(n, 1));
}

static void BM_ResolveSingle(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    State s = (State(1) << d.num_chords()) - 1;
    for (auto _ : state) {
        auto r = resolve(d, s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ResolveSingle)->DenseRange(4, 16, 4);

static void BM_CountAllStates(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    int n = d.num_chords();
    for (auto _ : state) {
        ComponentCounter cc(d);
        long total = 0;
        for (State s = 0; s < (State(1) << n); ++s) total += cc.count(s);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_CountAllStates)->DenseRange(8, 14, 2);

BENCHMARK_MAIN();
