#include <benchmark/benchmark.h>

#include "chowkit/splitting.hpp"
#include "chowkit/sweep.hpp"
#include "chowkit/verify.hpp"

using namespace chowkit;

namespace {

void BM_RankRange(benchmark::State& state) {
    const auto m = relation_determinant().matrix;
    const bool parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? sweep::rank_range(m, 0, 200) : sweep::rank_range_serial(m, 0, 200));
}
BENCHMARK(BM_RankRange)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_JetRanks(benchmark::State& state) {
    const JetSpec spec = parse_row_spec("3p3q");
    const bool parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? sweep::jet_ranks(16, spec, false) : sweep::jet_ranks_serial(16, spec, false));
}
BENCHMARK(BM_JetRanks)->Arg(0)->Arg(1)->ArgNames({"parallel"});

void BM_OracleAgreement(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? sweep::oracle_agreement(14) : sweep::oracle_agreement_serial(14));
}
BENCHMARK(BM_OracleAgreement)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
    const bool parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? sweep::enumerate(60) : sweep::enumerate_serial(60));
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->ArgNames({"parallel"});

}  // namespace

BENCHMARK_MAIN();
