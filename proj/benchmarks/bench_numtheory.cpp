#include <benchmark/benchmark.h>

#include "primestar/numtheory.hpp"

using primestar::Natural;

static void BM_IsPrimeWord(benchmark::State& state) {
    std::uint64_t n = 1'000'000'007ULL * 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(primestar::is_prime_u64(n));
        n += 2;
    }
}
BENCHMARK(BM_IsPrimeWord);

static void BM_IsPrimeBig(benchmark::State& state) {
    const Natural n = (Natural(1) << static_cast<unsigned>(state.range(0))) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(primestar::is_prime(n).is_prime);
}
// Mersenne exponents: every input is prime and runs the full test.
BENCHMARK(BM_IsPrimeBig)->Arg(127)->Arg(521)->Arg(1279);

static void BM_MultiplicativeOrder(benchmark::State& state) {
    const Natural m = Natural(static_cast<unsigned long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(primestar::multiplicative_order(2, m));
}
BENCHMARK(BM_MultiplicativeOrder)->Arg(1'000'003)->Arg(10'000'019);

static void BM_FactorialMod(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(primestar::factorial_mod(state.range(0), 1'000'000'007));
    }
}
BENCHMARK(BM_FactorialMod)->Arg(10'000)->Arg(1'000'000);

BENCHMARK_MAIN();
