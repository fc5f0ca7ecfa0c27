#include <benchmark/benchmark.h>

#include "levi/catalog.hpp"
#include "levi/cutsets.hpp"
#include "levi/cycles.hpp"
#include "levi/levi_graph.hpp"

static void QuasiPencilCutsets(benchmark::State& state) {
    const levi::Graph g = levi::quasi_pencil_graph(static_cast<int>(state.range(0))).graph;
    std::size_t count = 0;
    for (auto _ : state) {
        auto cs = levi::enumerate_cutsets(g);
        count = cs.size();
        benchmark::DoNotOptimize(cs);
    }
    state.counters["cutsets"] = static_cast<double>(count);
}

BENCHMARK(QuasiPencilCutsets)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

static void ProjectivePlaneCutsets(benchmark::State& state) {
    const levi::Graph g = levi::build_levi(levi::projective_plane(static_cast<int>(state.range(0)))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(levi::enumerate_cutsets(g));
}

BENCHMARK(ProjectivePlaneCutsets)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void LongestInducedPath(benchmark::State& state) {
    const levi::Graph g = levi::build_levi(levi::generic(1, static_cast<int>(state.range(0)))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(levi::longest_induced_path(g));
}

BENCHMARK(LongestInducedPath)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void InducedC6(benchmark::State& state) {
    const levi::Graph g = levi::build_levi(levi::generic(2, static_cast<int>(state.range(0)))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(levi::find_induced_c6(g));
}

BENCHMARK(InducedC6)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
