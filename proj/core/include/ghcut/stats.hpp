#pragma once

#include <cstdint>

namespace ghcut::stats {

// Instrumentation counters, accumulated globally (atomics). reset() between
// measured sections.
struct Snapshot {
    long long maxflow_calls = 0;
    long long flow_vertices = 0;   // sum of n over all max-flow instances
    long long flow_edges = 0;      // sum of m over all max-flow instances
    long long ghtree_retries = 0;  // seed retries after failed validation
    long long ghtree_step_fallbacks = 0;
    long long max_recursion_depth = 0;
};

void reset();
Snapshot snapshot();

void count_maxflow(int n, long long m);
void count_retry();
void count_step_fallback();
void note_depth(int depth);

}  // namespace ghcut::stats
