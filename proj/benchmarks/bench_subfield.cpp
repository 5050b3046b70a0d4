#include <benchmark/benchmark.h>

#include "hermicode/subfield.hpp"

using namespace hermicode;

static void BM_SubfieldAnalysisQ8(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 3);
    const HermitianCurve curve(tw);
    const LinearCode parent = build_hermitian_code(curve, uint64_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_subfield(parent, tw, nullptr, true).k0);
    }
}
BENCHMARK(BM_SubfieldAnalysisQ8)->Arg(256)->Arg(320)->Arg(448)->Unit(benchmark::kMillisecond);

static void BM_SubfieldAnalysisQ9(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(3, 1, 2);
    const HermitianCurve curve(tw);
    const LinearCode parent = build_hermitian_code(curve, uint64_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_subfield(parent, tw, nullptr, true).k0);
    }
}
BENCHMARK(BM_SubfieldAnalysisQ9)->Arg(120)->Arg(243)->Unit(benchmark::kMillisecond);

static void BM_BuildHermitianCode(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 3);
    const HermitianCurve curve(tw);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_hermitian_code(curve, uint64_t(state.range(0))).dimension);
    }
}
BENCHMARK(BM_BuildHermitianCode)->Arg(256)->Arg(511)->Unit(benchmark::kMillisecond);

static void BM_MainTheoremSweepQ4(benchmark::State& state) {
    const FieldTower tw = FieldTower::make(2, 1, 2);
    const HermitianCurve curve(tw);
    for (auto _ : state) {
        benchmark::DoNotOptimize(main_theorem_sweep(tw, curve).all_pass);
    }
}
BENCHMARK(BM_MainTheoremSweepQ4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
