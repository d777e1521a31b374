#include "misbound/enumerate.hpp"
#include "misbound/graph.hpp"
#include "misbound/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace misbound;

namespace {

// Moon-Moser graphs are the worst case for output size: 3^(n/3) sets.
template <EnumAlgorithm Algo>
void BM_CountMoonMoser(benchmark::State& state)
{
    const Graph g = moon_moser(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_mis(g, Algo));
    state.counters["sets"] = static_cast<double>(count_mis(g, EnumAlgorithm::pivot));
}

template <EnumAlgorithm Algo>
void BM_CountRandom(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i) graphs.push_back(random_graph(static_cast<int>(state.range(0)), rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(count_mis(graphs[i++ % graphs.size()], Algo));
}

void BM_Sweep(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sweep_all_graphs(static_cast<int>(state.range(0)), EnumAlgorithm::pivot, SweepOptions{1, false}));
}

} // namespace

BENCHMARK(BM_CountMoonMoser<EnumAlgorithm::pivot>)->DenseRange(9, 30, 3);
BENCHMARK(BM_CountMoonMoser<EnumAlgorithm::branching>)->DenseRange(9, 21, 3);
BENCHMARK(BM_CountMoonMoser<EnumAlgorithm::oracle>)->DenseRange(9, 18, 3);
BENCHMARK(BM_CountRandom<EnumAlgorithm::pivot>)->Arg(12)->Arg(20)->Arg(30);
BENCHMARK(BM_CountRandom<EnumAlgorithm::branching>)->Arg(12)->Arg(20)->Arg(30);
BENCHMARK(BM_CountRandom<EnumAlgorithm::oracle>)->Arg(12)->Arg(16);
BENCHMARK(BM_Sweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
