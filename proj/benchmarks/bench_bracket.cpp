#include <benchmark/benchmark.h>

#include <vector>

#include "vlink/bracket.hpp"
#include "vlink/diagram.hpp"

using namespace vlink;

// chain of n kinks with alternating signs: trivial bracket, 2^n states
static SignedChordDiagram kink_chain(int n) {
    std::vector<ChordId> word;
    std::vector<int> signs;
    for (int k = 0; k < n; ++k) {
        word.push_back(k);
        word.push_back(k);
        signs.push_back(k % 2 ? -1 : 1);
    }
    return SignedChordDiagram({word}, signs);
}

// (2,n) torus pattern: 1..n 1..n, all positive
static SignedChordDiagram torus_chain(int n) {
    std::vector<ChordId> word;
    for (int k = 0; k < n; ++k) word.push_back(k);
    for (int k = 0; k < n; ++k) word.push_back(k);
    return SignedChordDiagram({word}, std::vector<int>(n, 1));
}

static void BM_BracketKinkChain(benchmark::State& state) {
    auto d = kink_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = kauffman_bracket(d);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BracketKinkChain)->DenseRange(8, 16, 2);

static void BM_BracketTorus(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = kauffman_bracket(d);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BracketTorus)->DenseRange(6, 12, 2);

static void BM_JonesF(benchmark::State& state) {
    auto d = torus_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = jones_f(d);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_JonesF)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
