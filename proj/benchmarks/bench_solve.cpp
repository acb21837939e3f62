#include <benchmark/benchmark.h>

#include <asmbly/dp.hpp>
#include <asmbly/ilp.hpp>
#include <asmbly/rewrite.hpp>

#include "bench_common.hpp"

using namespace asmbly;

static void BM_SolvePathSplit(benchmark::State& state) {
    Expansion e = expand(bench::path_graph(int(state.range(0))), RuleKind::VertexSplit);
    IlpModel m(e.h, e.target);
    for (auto _ : state) benchmark::DoNotOptimize(solve(m));
}
BENCHMARK(BM_SolvePathSplit)->Arg(6)->Arg(10)->Arg(14);

static void BM_SolveCubaneEdge(benchmark::State& state) {
    Expansion e = expand(bench::cubane_graph(), RuleKind::EdgeRemoval);
    IlpModel m(e.h, e.target);
    for (auto _ : state) benchmark::DoNotOptimize(solve(m));
}
BENCHMARK(BM_SolveCubaneEdge)->Unit(benchmark::kMillisecond);

static void BM_SolveCycleSplit(benchmark::State& state) {
    Expansion e = expand(bench::cycle_graph(int(state.range(0))), RuleKind::VertexSplit);
    IlpModel m(e.h, e.target);
    for (auto _ : state) benchmark::DoNotOptimize(solve(m));
}
BENCHMARK(BM_SolveCycleSplit)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DpRetroCubane(benchmark::State& state) {
    Expansion e = expand(bench::cubane_graph(), RuleKind::VertexSplit);
    CostModel cm;
    cm.kind = CostKind::RetroYield;
    for (auto _ : state) benchmark::DoNotOptimize(dp_solve(e.h, cm));
}
BENCHMARK(BM_DpRetroCubane)->Unit(benchmark::kMillisecond);

static void BM_DpAdditiveCubane(benchmark::State& state) {
    Expansion e = expand(bench::cubane_graph(), RuleKind::VertexSplit);
    CostModel cm;
    cm.cycl_cost = 0;
    for (auto _ : state) benchmark::DoNotOptimize(dp_solve(e.h, cm));
}
BENCHMARK(BM_DpAdditiveCubane)->Unit(benchmark::kMillisecond);

static void BM_EnumerateP7(benchmark::State& state) {
    Expansion e = expand(bench::path_graph(7), RuleKind::VertexSplit);
    IlpModel m(e.h, e.target);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_optimal_witnesses(m, 100000));
}
BENCHMARK(BM_EnumerateP7);
