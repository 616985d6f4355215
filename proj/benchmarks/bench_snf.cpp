#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vlink/khovanov.hpp"

using namespace vlink;

static std::vector<std::vector<Coeff>> dense_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(-3, 3);
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n));
    for (auto& row : m)
        for (auto& x : row) x = Coeff(pick(rng));
    return m;
}

static void BM_SmithDense(benchmark::State& state) {
    auto m = dense_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        auto d = smith_divisors(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SmithDense)->DenseRange(8, 32, 8);

static void BM_SmithSparse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pos(0, n - 1);
    std::vector<std::vector<Coeff>> m(n, std::vector<Coeff>(n, Coeff(0)));
    for (int k = 0; k < 3 * n; ++k) m[pos(rng)][pos(rng)] = Coeff(1 + k % 2);
    for (auto _ : state) {
        auto d = smith_divisors(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SmithSparse)->DenseRange(16, 64, 16);

BENCHMARK_MAIN();
