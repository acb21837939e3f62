#include <benchmark/benchmark.h>

#include <asmbly/molgraph.hpp>

#include "bench_common.hpp"

using namespace asmbly;

static void BM_CanonicalPath(benchmark::State& state) {
    LabeledGraph g = bench::path_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalPath)->Arg(8)->Arg(32)->Arg(128);

static void BM_CanonicalCycle(benchmark::State& state) {
    LabeledGraph g = bench::cycle_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalCycle)->Arg(8)->Arg(32)->Arg(128);

static void BM_CanonicalCubane(benchmark::State& state) {
    LabeledGraph g = bench::cubane_graph();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalCubane);

static void BM_CanonicalRandom(benchmark::State& state) {
    LabeledGraph g = bench::random_graph(7, int(state.range(0)), int(state.range(0)) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(12)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
