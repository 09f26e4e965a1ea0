#include "dks/counting.hpp"
#include "dks/dedekind.hpp"
#include "dks/experiments.hpp"
#include "dks/knopp.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_DedekindFast(benchmark::State& state) {
    const auto b = static_cast<std::int64_t>(state.range(0));
    const std::int64_t a = b / 9 + 16;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dks::dedekind_fast(a, b));
    }
}
BENCHMARK(BM_DedekindFast)->Arg(1'000)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_DedekindNaive(benchmark::State& state) {
    const auto b = static_cast<std::int64_t>(state.range(0));
    const std::int64_t a = b / 9 + 16;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dks::dedekind_naive(a, b));
    }
}
BENCHMARK(BM_DedekindNaive)->Arg(1'000)->Arg(100'000);

void BM_DecomposeExample(benchmark::State& state) {
    const dks::Quadruple base{3504214, 31537789, 1, 9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dks::decompose(base, 12, true));
    }
}
BENCHMARK(BM_DecomposeExample);

void BM_ScanCell(benchmark::State& state) {
    dks::ExperimentConfig config;
    config.b_start = 100'000'001;
    config.b_count = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dks::run_scan(config, 1));
        ++config.b_start;
    }
}
BENCHMARK(BM_ScanCell);

void BM_CountingFormula(benchmark::State& state) {
    const auto query = dks::CountingQuery::make(720720, 12, 1, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dks::count_A_formula(query));
    }
}
BENCHMARK(BM_CountingFormula);

}  // namespace

BENCHMARK_MAIN();
