#include <benchmark/benchmark.h>

#include "dsieve/scanner.hpp"
#include "dsieve/symmetry.hpp"

static void BM_BuildSieve(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto sieve = dsieve::build_sieve(n);
        benchmark::DoNotOptimize(sieve.complement.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildSieve)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_GoldbachOracle(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto pairs = dsieve::goldbach_oracle(n);
        benchmark::DoNotOptimize(pairs.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GoldbachOracle)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_SymmetryGroup(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    const dsieve::GoldbachSieve sieve = dsieve::build_sieve(n);
    for (auto _ : state) {
        auto group = dsieve::compute_symmetry_group(sieve);
        benchmark::DoNotOptimize(group.elements.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SymmetryGroup)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_Classify(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto record = dsieve::classify(n);
        benchmark::DoNotOptimize(record.group_order);
    }
}
BENCHMARK(BM_Classify)->Arg(120)->Arg(512)->Arg(2048);

static void BM_ScanRange(benchmark::State& state) {
    for (auto _ : state) {
        auto records = dsieve::scan_range(4, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(records.data());
    }
}
BENCHMARK(BM_ScanRange)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
