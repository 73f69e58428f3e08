#include <benchmark/benchmark.h>

#include "romancvd/rng.hpp"
#include "romancvd/scp.hpp"

namespace {

using namespace romancvd;

// Random instance with every block flag taken from `flag_pool`, so the same
// builder serves both the plain and the independent DP.
ScpInstance random_instance(int universe, int blocks, int sets_per_block,
                            const std::vector<int>& flag_pool, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<uint32_t> family;
    std::vector<int> sizes, flags;
    for (int b = 0; b < blocks; ++b) {
        sizes.push_back(sets_per_block);
        flags.push_back(flag_pool[rng.next_below(flag_pool.size())]);
        for (int j = 0; j < sets_per_block; ++j) {
            uint32_t mask = 0;
            for (int e = 0; e < universe; ++e)
                if (rng.next_bernoulli(0.3)) mask |= 1u << e;
            family.push_back(mask);
        }
    }
    return ScpInstance(universe, family, sizes, flags, std::nullopt);
}

void bm_scp_value(benchmark::State& state) {
    const int universe = static_cast<int>(state.range(0));
    const int blocks = static_cast<int>(state.range(1));
    ScpInstance inst = random_instance(universe, blocks, 4, {0, 1, 2}, 12345);
    uint64_t cells = 0;
    for (auto _ : state) {
        int32_t v = scp_optimum_value(inst, cells);
        benchmark::DoNotOptimize(v);
    }
    state.counters["dp_cells"] = static_cast<double>(cells);
}

void bm_scp_witness(benchmark::State& state) {
    const int universe = static_cast<int>(state.range(0));
    const int blocks = static_cast<int>(state.range(1));
    ScpInstance inst = random_instance(universe, blocks, 4, {0, 1, 2}, 12345);
    for (auto _ : state) {
        DpSolution sol = solve_scp(inst);
        benchmark::DoNotOptimize(sol.value);
    }
}

void bm_iscp_value(benchmark::State& state) {
    const int universe = static_cast<int>(state.range(0));
    const int blocks = static_cast<int>(state.range(1));
    ScpInstance inst = random_instance(universe, blocks, 4, {1, 2}, 777);
    uint64_t cells = 0;
    for (auto _ : state) {
        int32_t v = iscp_optimum_value(inst, cells);
        benchmark::DoNotOptimize(v);
    }
    state.counters["dp_cells"] = static_cast<double>(cells);
}

BENCHMARK(bm_scp_value)->Args({8, 16})->Args({12, 64})->Args({16, 256})->Args({18, 1024});
BENCHMARK(bm_scp_witness)->Args({8, 16})->Args({12, 64})->Args({16, 256});
BENCHMARK(bm_iscp_value)->Args({8, 16})->Args({12, 64})->Args({16, 256})->Args({18, 1024});

}  // namespace
