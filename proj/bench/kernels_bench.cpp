// Serial reference against the OpenMP path for the exhaustive kernels.
// Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "homfull/constructions.hpp"
#include "homfull/generators.hpp"
#include "homfull/harness.hpp"

using namespace homfull;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

// Band graph with 0 and 8 at distance 3: no orientation is an oriented clique,
// so every code is tried.
Graph no_oclique_graph() {
    Graph::Builder b(9);
    for (auto [u, v] : {std::pair<VertexId, VertexId>{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                        {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {0, 3}, {5, 8}, {1, 4}, {4, 7}})
        b.connect(u, v);
    return std::move(b).build();
}

void BM_OcliqueOrientationExhaustive(benchmark::State& state) {
    const Graph g = no_oclique_graph();
    Limits limits = default_limits();
    limits.oclique_edges = 24;
    for (auto _ : state) benchmark::DoNotOptimize(oclique_orientation_exhaustive(g, exec_of(state), limits));
    state.SetLabel(std::to_string(g.edge_count()) + " edges");
}

void BM_HomfullOrientationExhaustive(benchmark::State& state) {
    const Graph g = fullorient_gadget(empty_graph(3)).output;
    Limits limits = default_limits();
    limits.homfull_orientation_edges = 20;
    for (auto _ : state) benchmark::DoNotOptimize(homfull_orientation_exhaustive(g, exec_of(state), limits));
    state.SetLabel(std::to_string(g.edge_count()) + " edges");
}

void BM_GraphEquivalenceSuite(benchmark::State& state) {
    HarnessConfig cfg;
    cfg.max_n = 6;
    cfg.exec = exec_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_theorem("graph-equivalence", cfg).failures);
    state.SetLabel(std::to_string(worker_count()) + " threads");
}

}  // namespace

BENCHMARK(BM_OcliqueOrientationExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomfullOrientationExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GraphEquivalenceSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
