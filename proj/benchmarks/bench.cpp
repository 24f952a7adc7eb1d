#include <benchmark/benchmark.h>

#include <vector>

#include "ghcut/gen.hpp"
#include "ghcut/ghtree.hpp"
#include "ghcut/maxflow.hpp"

using namespace ghcut;

namespace {

Graph make(int n) { return random_connected_graph(n, 3 * n, 50, 12345); }

std::vector<VertexId> all(int n) {
    std::vector<VertexId> u(n);
    for (int i = 0; i < n; ++i) u[i] = i;
    return u;
}

void BM_maxflow(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = make(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_flow_value(g, 0, n - 1));
    state.SetComplexityN(n);
}
BENCHMARK(BM_maxflow)->Range(32, 512)->Complexity();

void BM_classic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = make(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(gomory_hu_classic(g));
    state.SetComplexityN(n);
}
BENCHMARK(BM_classic)->Range(32, 256)->Complexity();

void BM_gusfield(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = make(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(gusfield(g));
    state.SetComplexityN(n);
}
BENCHMARK(BM_gusfield)->Range(32, 256)->Complexity();

void BM_fast(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = make(n);
    std::vector<VertexId> u = all(n);
    GhConfig cfg;
    cfg.validate = false;  // time the construction alone
    for (auto _ : state)
        benchmark::DoNotOptimize(ghtree_fast(g, u, cfg));
    state.SetComplexityN(n);
}
BENCHMARK(BM_fast)->Range(32, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
