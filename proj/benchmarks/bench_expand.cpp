#include <benchmark/benchmark.h>

#include <asmbly/rewrite.hpp>

#include "bench_common.hpp"

using namespace asmbly;

static void BM_ExpandPathSplit(benchmark::State& state) {
    LabeledGraph g = bench::path_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(expand(g, RuleKind::VertexSplit));
}
BENCHMARK(BM_ExpandPathSplit)->Arg(6)->Arg(10)->Arg(14);

static void BM_ExpandCycleSplit(benchmark::State& state) {
    LabeledGraph g = bench::cycle_graph(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(expand(g, RuleKind::VertexSplit));
}
BENCHMARK(BM_ExpandCycleSplit)->Arg(6)->Arg(8);

static void BM_ExpandCubaneEdge(benchmark::State& state) {
    LabeledGraph g = bench::cubane_graph();
    for (auto _ : state) benchmark::DoNotOptimize(expand(g, RuleKind::EdgeRemoval));
}
BENCHMARK(BM_ExpandCubaneEdge);

static void BM_ExpandCubaneSplit(benchmark::State& state) {
    LabeledGraph g = bench::cubane_graph();
    for (auto _ : state) benchmark::DoNotOptimize(expand(g, RuleKind::VertexSplit));
}
BENCHMARK(BM_ExpandCubaneSplit)->Unit(benchmark::kMillisecond);

static void BM_DecyclizationClosure(benchmark::State& state) {
    LabeledGraph g = bench::cubane_graph();
    for (auto _ : state) benchmark::DoNotOptimize(decyclization_closure(g));
}
BENCHMARK(BM_DecyclizationClosure)->Unit(benchmark::kMillisecond);
