#include <benchmark/benchmark.h>

#include "staghunt/design.hpp"
#include "staghunt/gibbs.hpp"
#include "staghunt/graph.hpp"
#include "staghunt/lll.hpp"
#include "staghunt/rng.hpp"

using namespace staghunt;

static void BM_StationaryProbStream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = build_k_regular(n, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(stationary_prob_star(g, 0.3, 1.0));
    state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_StationaryProbStream)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_ExactGibbsStored(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = build_k_regular(n, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_gibbs(g, 0.3, 1.0).log_partition());
    state.SetItemsProcessed(state.iterations() * (1ll << n));
}
BENCHMARK(BM_ExactGibbsStored)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_LllSimulate(benchmark::State& state) {
    const Graph g = build_k_regular(16, 4);
    ChainConfig config;
    config.steps = 100000;
    config.burn_in = 0;
    config.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(g, 0.3, 1.0, config).total());
    state.SetItemsProcessed(state.iterations() * config.steps);
}
BENCHMARK(BM_LllSimulate)->Unit(benchmark::kMillisecond);

static void BM_SpectralRadius(benchmark::State& state) {
    Rng rng(7);
    const Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.05, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral_radius(g));
}
BENCHMARK(BM_SpectralRadius)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_BlossomMatching(benchmark::State& state) {
    // Complement of a circulant: dense non-bipartite matching workload.
    const int n = static_cast<int>(state.range(0));
    const Graph base = build_k_regular(n, 6);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!base.has_edge(u, v)) edges.emplace_back(u, v);
    const Graph comp = Graph::from_edges(n, edges);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_matching(comp).size());
}
BENCHMARK(BM_BlossomMatching)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_CltSample(benchmark::State& state) {
    Rng rng(11);
    const int n = static_cast<int>(state.range(0));
    const Graph g = erdos_renyi(n, 10.0 / n, rng);
    for (auto _ : state) {
        Rng local(37);
        benchmark::DoNotOptimize(clt_sample(g, 0.3, local, 10000).ks_statistic);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_CltSample)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
