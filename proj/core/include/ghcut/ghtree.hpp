#pragma once

#include <cstdint>
#include <vector>

#include "ghcut/graph.hpp"
#include "ghcut/ssmc.hpp"

namespace ghcut {

struct GhTreeEdge {
    VertexId a = -1;
    VertexId b = -1;
    Weight w = 0;
};

// Gomory-Hu (Steiner) tree: a tree on the terminals U with a representative
// map f : V -> U. For every pair a,b in U the minimum-weight edge on the a-b
// tree path has weight lambda(a,b), and the f-preimage of a's component after
// deleting it is an (a,b)-mincut in the original graph.
struct GhTree {
    std::vector<VertexId> terminals;  // U, sorted; f[u] == u for u in U
    std::vector<GhTreeEdge> edges;    // exactly |U|-1 edges
    std::vector<VertexId> f;          // size n (original graph)
};

struct GhConfig {
    std::uint64_t seed = 1;
    bool validate = true;     // validate the fast tree and retry on failure
    int max_retries = 3;
    int validate_exact_max_terminals = 60;  // full pairwise validation cutoff
    int validate_spot_checks = 200;         // sampled pairs above the cutoff
    SsmcConfig ssmc;
};

// One recursive step of the fast construction: the chosen iteration's set D
// and the qualifying parts (pivot v, minimal cut S_v with value lambda(s,v)
// and |S_v ∩ U| <= |U|/2).
struct StepResult {
    int iteration = -1;
    std::vector<VertexId> d;  // union of S_v ∩ U, sorted
    std::vector<std::pair<VertexId, Cut>> parts;
};

// Classic recursive construction: exactly n-1 max-flows on contractions.
GhTree gomory_hu_classic(const Graph& g);

// Gusfield's variant: n-1 max-flows, all on the original graph.
GhTree gusfield(const Graph& g);

// The randomized step: for i = 0..floor(lg|U|), isolating cuts on the
// singletons of a halved sample R^i, single-source terminal mincuts from s,
// and the selection predicate; returns the largest qualifying D^i.
StepResult ghtree_step(const Graph& g, VertexId s, const std::vector<VertexId>& terminals,
                       const GhConfig& cfg);

// The recursive nearly-quadratic construction (random pivot, ghtree_step,
// per-part and large-side contractions, Combine). Monte Carlo; with
// cfg.validate it is checked and retried with fresh seeds, falling back to
// the exact classic split, so the returned tree is always valid.
GhTree ghtree_fast(const Graph& g, const std::vector<VertexId>& terminals,
                   const GhConfig& cfg);

struct TreeQueryResult {
    Weight value = 0;
    Cut cut;  // side containing a, expanded through f
};

// Min edge on the a-b tree path (ties: closest to b) and the corresponding
// cut in the original graph. Throws if a == b or either is not a terminal.
TreeQueryResult tree_query(const GhTree& t, VertexId a, VertexId b);

}  // namespace ghcut
