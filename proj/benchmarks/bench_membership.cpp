#include <benchmark/benchmark.h>

#include "primestar/primelang.hpp"
#include "primestar/witness.hpp"

static void BM_InPbStarWitness(benchmark::State& state) {
    // 15 * 2^n + 1 style witness with a long zero run
    const auto text = primestar::witness_numeral(2, static_cast<std::uint64_t>(state.range(0)), 15).str();
    for (auto _ : state) benchmark::DoNotOptimize(primestar::in_pb_star(text, 2).member);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InPbStarWitness)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_InPbStarDecimal(benchmark::State& state) {
    std::string text;
    for (int i = 0; i < state.range(0); ++i) text.push_back(static_cast<char>('1' + (i * 7) % 9));
    for (auto _ : state) benchmark::DoNotOptimize(primestar::in_pb_star(text, 10).member);
}
BENCHMARK(BM_InPbStarDecimal)->Arg(10)->Arg(40)->Arg(100);

static void BM_ComputeFb(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(primestar::compute_fb(2, static_cast<std::uint64_t>(state.range(0)), 1'000'000));
    }
}
BENCHMARK(BM_ComputeFb)->Arg(9)->Arg(64)->Arg(200);

static void BM_NerodeBound(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            primestar::nerode_lower_bound(2, primestar::Language::PbStar, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_NerodeBound)->Arg(8)->Arg(12)->Arg(14);

BENCHMARK_MAIN();
