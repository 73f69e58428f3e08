#include <benchmark/benchmark.h>

#include "romancvd/generators.hpp"
#include "romancvd/ird_pipeline.hpp"
#include "romancvd/rd_pipeline.hpp"

namespace {

using namespace romancvd;

void bm_solve_rd(benchmark::State& state) {
    const int cliques = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    GeneratedInstance inst = gen_cluster_plus_k(cliques, {2, 6}, k, 0.15, 99);
    SolveOptions opts;
    opts.threads = static_cast<int>(state.range(2));
    uint64_t guesses = 0;
    for (auto _ : state) {
        SolveResult res = solve_rd(inst.graph, inst.cvd_set, opts);
        guesses = res.stats.guesses_enumerated;
        benchmark::DoNotOptimize(res.value);
    }
    state.counters["guesses"] = static_cast<double>(guesses);
}

void bm_solve_ird(benchmark::State& state) {
    const int cliques = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    GeneratedInstance inst = gen_cluster_plus_k(cliques, {2, 6}, k, 0.15, 99);
    SolveOptions opts;
    opts.threads = static_cast<int>(state.range(2));
    for (auto _ : state) {
        SolveResult res = solve_ird(inst.graph, inst.cvd_set, opts);
        benchmark::DoNotOptimize(res.value);
    }
}

// args: cliques, modulator size, threads
BENCHMARK(bm_solve_rd)
    ->Args({20, 6, 1})
    ->Args({50, 8, 1})
    ->Args({50, 10, 1})
    ->Args({50, 10, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_solve_ird)
    ->Args({20, 6, 1})
    ->Args({50, 8, 1})
    ->Args({50, 10, 1})
    ->Args({50, 10, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
