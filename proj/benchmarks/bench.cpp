#include <benchmark/benchmark.h>

#include <random>

#include "g2pc/affine_model.hpp"
#include "g2pc/perfectness.hpp"
#include "g2pc/qlevel1.hpp"

using namespace g2pc;

static void BM_Reduce(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> sym(-1, 1);
    UWord w;
    for (int k = 0; k < state.range(0); ++k) w.push(static_cast<std::int8_t>(sym(rng)), k);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(8)->Range(8, 4096)->Complexity();

static void BM_G2Enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(g2_enumerate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_G2Enumerate)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_BuildLevel(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AffineModel m;
        benchmark::DoNotOptimize(&m.level(l));
    }
}
BENCHMARK(BM_BuildLevel)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyConstruction(benchmark::State& state) {
    AffineModel m;
    const Level& L = m.level(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_construction(L));
}
BENCHMARK(BM_VerifyConstruction)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_TensorSquare(benchmark::State& state) {
    AffineModel m;
    const CrystalGraph G = build_Bl(m.level(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(tensor_square_components(G));
}
BENCHMARK(BM_TensorSquare)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FusionIdentities(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_fusion_identities());
}
BENCHMARK(BM_FusionIdentities)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
