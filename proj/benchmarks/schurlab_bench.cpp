#include <random>

#include <benchmark/benchmark.h>

#include "schurlab/bounds.hpp"
#include "schurlab/catalog.hpp"
#include "schurlab/free_nilpotent.hpp"
#include "schurlab/multiplier.hpp"

using namespace schurlab;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Scalar(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    return m;
}

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_SubspaceIntersect(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n / 2 + 1, n, 2), b = random_matrix(n / 2 + 1, n, 3);
    std::vector<Vector> ra, rb;
    for (std::size_t i = 0; i < a.rows(); ++i) ra.push_back(a.row_vector(i));
    for (std::size_t i = 0; i < b.rows(); ++i) rb.push_back(b.row_vector(i));
    const auto sa = Subspace::span(n, ra), sb = Subspace::span(n, rb);
    for (auto _ : state) benchmark::DoNotOptimize(intersect(sa, sb));
}
BENCHMARK(BM_SubspaceIntersect)->Arg(8)->Arg(24);

void BM_FreeNilpotent(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto s = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(free_nilpotent_algebra(d, s));
}
BENCHMARK(BM_FreeNilpotent)->Args({2, 5})->Args({3, 4})->Args({4, 3})->Args({6, 2});

void BM_Multiplier(benchmark::State& state, const char* name) {
    const LieAlgebra l = catalog_get(name);
    for (auto _ : state) benchmark::DoNotOptimize(multiplier_report(l));
}
BENCHMARK_CAPTURE(BM_Multiplier, L5_7, "L5_7");
BENCHMARK_CAPTURE(BM_Multiplier, L6_26, "L6_26");
BENCHMARK_CAPTURE(BM_Multiplier, H1_A3, "H1+A3");
BENCHMARK_CAPTURE(BM_Multiplier, L5_7_A3, "L5_7+A3");

void BM_Sweep(benchmark::State& state) {
    const auto max_dim = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classification_sweep(max_dim));
}
BENCHMARK(BM_Sweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
