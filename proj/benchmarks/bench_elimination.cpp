#include <benchmark/benchmark.h>

#include <random>

#include "hermicode/matrix.hpp"

using namespace hermicode;

namespace {

MatrixGF random_gf2(const FieldTower& tw, size_t rows, size_t cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<uint32_t> bit(0, 1);
    MatrixGF m(tw, 2, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set_raw(i, j, uint16_t(bit(rng)));
    return m;
}

}  // namespace

static void BM_RrefGF2Packed(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    const size_t n = size_t(state.range(0));
    const MatrixGF m = random_gf2(tw, 3 * n, n, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::rref_packed_gf2(m).rank);
    }
    state.SetComplexityN(int64_t(n));
}
BENCHMARK(BM_RrefGF2Packed)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_RrefGF2Generic(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 1);
    const size_t n = size_t(state.range(0));
    const MatrixGF m = random_gf2(tw, 3 * n, n, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::rref_generic(m).rank);
    }
    state.SetComplexityN(int64_t(n));
}
BENCHMARK(BM_RrefGF2Generic)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_RrefGF3Bytes(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(3, 1, 1);
    const size_t n = size_t(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> trit(0, 2);
    MatrixGF m(tw, 3, 3 * n, n);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < n; ++j) m.set_raw(i, j, uint16_t(trit(rng)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::rref_bytes_prime(m).rank);
    }
}
BENCHMARK(BM_RrefGF3Bytes)->Arg(243)->Arg(729)->Unit(benchmark::kMillisecond);

static void BM_FieldMulThroughput(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 3);
    std::mt19937 rng(3);
    std::uniform_int_distribution<uint32_t> pick(0, tw.q2() - 1);
    std::vector<uint32_t> a(4096), b(4096);
    for (size_t i = 0; i < a.size(); ++i) {
        a[i] = pick(rng);
        b[i] = pick(rng);
    }
    for (auto _ : state) {
        uint32_t acc = 0;
        for (size_t i = 0; i < a.size(); ++i) acc ^= tw.mul_raw(a[i], b[i]);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(a.size()));
}
BENCHMARK(BM_FieldMulThroughput);
