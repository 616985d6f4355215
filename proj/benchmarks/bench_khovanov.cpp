#include <benchmark/benchmark.h>

#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/khovanov.hpp"

using namespace vlink;

static SignedChordDiagram torus_chain(int n) {
    std::vector<ChordId> word;
    for (int k = 0; k < n; ++k) word.push_back(k);
    for (int k = 0; k < n; ++k) word.push_back(k);
    return SignedChordDiagram({word}, std::vector<int>(n, 1));
}

static void BM_BuildComplex(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto c = build_complex(d);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_BuildComplex)->DenseRange(3, 9, 2);

static void BM_Homology(benchmark::State& state) {
    auto c = build_complex(torus_chain(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto h = homology(c);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_Homology)->DenseRange(3, 7, 2);

static void BM_DsqDefect(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rep = dsq_defect(d);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_DsqDefect)->DenseRange(4, 10, 2);

BENCHMARK_MAIN();
