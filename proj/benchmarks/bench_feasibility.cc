#include <benchmark/benchmark.h>

#include "georoute/feasibility.hpp"

using namespace georoute;

namespace {

void BM_ProbAtLeastK(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(prob_at_least_k(k, 9.8175));
}
BENCHMARK(BM_ProbAtLeastK)->Arg(1)->Arg(10)->Arg(40);

void BM_MonteCarlo(benchmark::State& state)
{
    const FeasibilityParams params{0.0002, 250.0, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_region_counts(params, RegionKind::quarter_circle, state.range(0), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
