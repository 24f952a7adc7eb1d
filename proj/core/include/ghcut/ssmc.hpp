#pragma once

#include <cstdint>
#include <map>

#include "ghcut/graph.hpp"
#include "ghcut/oracles.hpp"
#include "ghcut/packing.hpp"

namespace ghcut {

struct SsmcConfig {
    int base_case_size = 10;            // |R(T)| below this -> direct flows
    double sampling_trials_factor = 3.0;  // step 5 repeats ceil(factor * ln n)
    int k = 4;                          // respect parameter for the pipeline
    std::uint64_t seed = 1;
    int guide_trees = 0;                // 0 -> pipeline default ceil(3 ln n)
    // MWU accuracy for guide-tree packing. Sampling only needs a rough
    // packing; the iteration count grows like 1/eps^2, so this is kept loose.
    double pack_epsilon = 0.3;
    SsmcApproxOracle* approx_oracle = nullptr;  // null -> exact default
    // Engineering cap on the Monte-Carlo recursion inside sstm_promise: the
    // guide-tree count times (trials+1)^(k-1) is kept below this by lowering k
    // (0 = uncapped). Lower k only weakens estimates upward, which the tree
    // pipeline absorbs via its selection predicate and validation fallback.
    long long guided_branch_budget = 256;
};

// Per-terminal estimates, keyed by original vertex id. Guaranteed
// lambda~(t) >= lambda(s,t); equal when some (s,t)-mincut k-respects the tree,
// w.h.p.
using Estimates = std::map<VertexId, Weight>;

// Centroid of a guide tree: node such that, rooted there, every child subtree
// holds at most |R(T)|/2 real vertices. Found by the max-depth dynamic program.
int centroid(const GuideTree& t);

// The recursive guided single-source mincut algorithm (six steps: base case,
// centroid flow, isolating cuts on subtree terminal sets, per-subtree
// contraction + recursion at the same k, half-sampling trials at k-1, and the
// max-finder + source relabeling at k-1). s must be a real vertex of t.
Estimates ssmc_guided(const Graph& g, const GuideTree& t, VertexId s, int k,
                      const SsmcConfig& cfg);

// Single-source terminal mincuts under the promise
// lambda(U) <= lambda(s,t) <= 1.1 lambda(U): sample guide trees, run
// ssmc_guided with k on each, keep per-terminal minima. Exact w.h.p.
Estimates sstm_promise(const Graph& g, const std::vector<VertexId>& terminals,
                       VertexId s, const SsmcConfig& cfg);

// Promise removal: (1+0.01)-bucket the terminals by approximate single-source
// mincut value, solve each bucket as a promise instance, merge. Buckets small
// enough for direct flows are short-circuited exactly.
Estimates sstm_no_promise(const Graph& g, const std::vector<VertexId>& terminals,
                          VertexId s, const SsmcConfig& cfg);

}  // namespace ghcut
