#include "ghcut/stats.hpp"

#include <atomic>

namespace ghcut::stats {

namespace {
std::atomic<long long> g_maxflow_calls{0};
std::atomic<long long> g_flow_vertices{0};
std::atomic<long long> g_flow_edges{0};
std::atomic<long long> g_retries{0};
std::atomic<long long> g_step_fallbacks{0};
std::atomic<long long> g_max_depth{0};
}  // namespace

void reset() {
    g_maxflow_calls = 0;
    g_flow_vertices = 0;
    g_flow_edges = 0;
    g_retries = 0;
    g_step_fallbacks = 0;
    g_max_depth = 0;
}

Snapshot snapshot() {
    Snapshot s;
    s.maxflow_calls = g_maxflow_calls.load();
    s.flow_vertices = g_flow_vertices.load();
    s.flow_edges = g_flow_edges.load();
    s.ghtree_retries = g_retries.load();
    s.ghtree_step_fallbacks = g_step_fallbacks.load();
    s.max_recursion_depth = g_max_depth.load();
    return s;
}

void count_maxflow(int n, long long m) {
    g_maxflow_calls.fetch_add(1, std::memory_order_relaxed);
    g_flow_vertices.fetch_add(n, std::memory_order_relaxed);
    g_flow_edges.fetch_add(m, std::memory_order_relaxed);
}

void count_retry() { g_retries.fetch_add(1, std::memory_order_relaxed); }
void count_step_fallback() { g_step_fallbacks.fetch_add(1, std::memory_order_relaxed); }

void note_depth(int depth) {
    long long cur = g_max_depth.load();
    while (depth > cur && !g_max_depth.compare_exchange_weak(cur, depth)) {
    }
}

}  // namespace ghcut::stats
