// Microbenchmarks for the iteration variants and the centrality baselines.
// Run with --benchmark_filter=... to narrow down; networks are regenerated
// per size from fixed seeds, so results are comparable across runs.

#include <benchmark/benchmark.h>

#include "spinrank/centrality.hpp"
#include "spinrank/netgen.hpp"
#include "spinrank/spin.hpp"

namespace {

using namespace spinrank;

SocialNetwork make_network(std::size_t nodes, std::size_t edges) {
    GenSpec spec;
    spec.node_count = nodes;
    spec.edge_count = edges;
    spec.seed = 20080101;
    return generate(spec);
}

SpinConfig fixed_iterations(std::size_t count) {
    SpinConfig cfg;
    cfg.epsilon = 0.8;
    cfg.tau = 1e-300;  // never met: benchmark a fixed amount of work
    cfg.max_iterations = count;
    return cfg;
}

void BM_SpinVariant(benchmark::State& state, SpinVariant variant) {
    SocialNetwork net = make_network(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    const SpinConfig cfg = fixed_iterations(5);
    for (auto _ : state) {
        SpinResult r = run_spin(net, cfg, variant);
        benchmark::DoNotOptimize(r.sp.values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 5 *
                            static_cast<std::int64_t>(net.edge_count()));
}

void BM_Degree(benchmark::State& state) {
    SocialNetwork net = make_network(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        CentralityScores scores = degree(net, DegreeDirection::Both, true);
        benchmark::DoNotOptimize(scores.values.data());
    }
}

void BM_ProximityPrestige(benchmark::State& state) {
    SocialNetwork net = make_network(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        CentralityScores scores = proximity_prestige(net, true);
        benchmark::DoNotOptimize(scores.values.data());
    }
}

void network_sizes(benchmark::internal::Benchmark* b) {
    b->Args({1000, 5000})->Args({10000, 50000})->Args({50000, 100000});
}

}  // namespace

BENCHMARK_CAPTURE(BM_SpinVariant, nodes, SpinVariant::Nodes)->Apply(network_sizes);
BENCHMARK_CAPTURE(BM_SpinVariant, edges, SpinVariant::Edges)->Apply(network_sizes);
BENCHMARK_CAPTURE(BM_SpinVariant, hybrid, SpinVariant::Hybrid)->Apply(network_sizes);
BENCHMARK(BM_Degree)->Apply(network_sizes);
BENCHMARK(BM_ProximityPrestige)->Args({1000, 5000});

BENCHMARK_MAIN();
