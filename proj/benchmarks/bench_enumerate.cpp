#include <benchmark/benchmark.h>

#include "chordless/enumerate.hpp"
#include "chordless/generators.hpp"
#include "chordless/labeling.hpp"

using namespace chordless;

namespace {

void BM_DegreeLabeling(benchmark::State& state) {
    const Graph g = gen_grid(state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(degree_labeling(g));
    }
}
BENCHMARK(BM_DegreeLabeling)->Arg(10)->Arg(30);

void BM_EnumerateDfsGrid(benchmark::State& state) {
    const Graph g = gen_grid(state.range(0), state.range(1));
    const Labeling ell = degree_labeling(g);
    for (auto _ : state) {
        std::int64_t cycles = 0;
        const EnumStats stats =
            enumerate_dfs(g, ell, [&](auto) { ++cycles; });
        benchmark::DoNotOptimize(stats);
        benchmark::DoNotOptimize(cycles);
    }
}
BENCHMARK(BM_EnumerateDfsGrid)->Args({4, 10})->Args({5, 10})->Args({6, 6});

void BM_EnumerateBfsGrid(benchmark::State& state) {
    const Graph g = gen_grid(state.range(0), state.range(1));
    const Labeling ell = degree_labeling(g);
    for (auto _ : state) {
        const EnumStats stats = enumerate_bfs(g, ell, [](auto) {});
        benchmark::DoNotOptimize(stats);
    }
}
BENCHMARK(BM_EnumerateBfsGrid)->Args({4, 10})->Args({5, 6});

void BM_EnumerateDfsBipartite(benchmark::State& state) {
    const Graph g =
        gen_complete_bipartite(state.range(0), state.range(0));
    const Labeling ell = degree_labeling(g);
    for (auto _ : state) {
        const EnumStats stats = enumerate_dfs(g, ell, [](auto) {});
        benchmark::DoNotOptimize(stats);
    }
}
BENCHMARK(BM_EnumerateDfsBipartite)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
