#include <benchmark/benchmark.h>

#include "primestar/refuter.hpp"

namespace {

// Single accepting state.
primestar::DfaSpec accept_everything() {
    primestar::DfaSpec dfa;
    dfa.base = 2;
    dfa.state_count = 1;
    dfa.start = 0;
    dfa.accepting = {true};
    dfa.transitions = {0, 0};
    return dfa;
}

}  // namespace

// Full enumeration of every binary string up to the given length: the
// oracle side of a counterexample search with no early exit.
static void BM_StarEnumeration(benchmark::State& state) {
    const unsigned depth = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        primestar::MembershipTracker tracker(2);
        std::uint64_t accepted = 0;
        auto walk = [&](auto&& self) -> void {
            accepted += tracker.in_pb_star();
            if (tracker.size() == depth) return;
            for (primestar::Digit d = 0; d < 2; ++d) {
                tracker.push(d);
                self(self);
                tracker.pop();
            }
        };
        walk(walk);
        benchmark::DoNotOptimize(accepted);
    }
}
BENCHMARK(BM_StarEnumeration)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_FindCounterexample(benchmark::State& state) {
    const auto dfa = accept_everything();
    for (auto _ : state) {
        benchmark::DoNotOptimize(primestar::find_counterexample(dfa, primestar::Language::PbStar, 18));
    }
}
BENCHMARK(BM_FindCounterexample);

static void BM_PumpingRefutation(benchmark::State& state) {
    const unsigned p = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(primestar::pumping_refutation(2, p, 64, 100'000));
}
BENCHMARK(BM_PumpingRefutation)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
