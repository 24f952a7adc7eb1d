#pragma once

// Brute-force cut oracles used to freeze expected values in tests. These are
// deliberately independent of the flow engine: plain subset enumeration.

#include <cstdint>
#include <utility>
#include <vector>

#include "ghcut/graph.hpp"

namespace testutil {

inline ghcut::Weight cut_of_mask(const ghcut::Graph& g, unsigned mask) {
    ghcut::Weight total = 0;
    for (const ghcut::Edge& e : g.edges())
        if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) total += e.w;
    return total;
}

inline unsigned to_mask(const std::vector<ghcut::VertexId>& vs) {
    unsigned m = 0;
    for (ghcut::VertexId v : vs) m |= 1u << v;
    return m;
}

// Minimum (A,B)-cut over all 2^n sides; returns (value, vertex-minimal side
// containing A). The minimal side is the intersection of all optimal sides
// (optimal sides are closed under intersection).
inline std::pair<ghcut::Weight, unsigned> brute_min_cut(const ghcut::Graph& g,
                                                        unsigned a_mask, unsigned b_mask) {
    const int n = g.num_vertices();
    const unsigned full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
    ghcut::Weight best = -1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if ((mask & a_mask) != a_mask || (mask & b_mask) != 0) continue;
        ghcut::Weight c = cut_of_mask(g, mask);
        if (best < 0 || c < best) best = c;
    }
    unsigned minimal = full;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if ((mask & a_mask) != a_mask || (mask & b_mask) != 0) continue;
        if (cut_of_mask(g, mask) == best) minimal &= mask;
    }
    return {best, minimal};
}

inline ghcut::Weight brute_lambda(const ghcut::Graph& g, ghcut::VertexId s,
                                  ghcut::VertexId t) {
    return brute_min_cut(g, 1u << s, 1u << t).first;
}

inline std::vector<ghcut::VertexId> mask_to_side(unsigned mask, int n) {
    std::vector<ghcut::VertexId> out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

// Small named fixtures reused across tests.
inline ghcut::Graph p3_weighted() {  // path 0-1-2 with weights 3, 5
    return ghcut::Graph::build(3, {{0, 1, 3}, {1, 2, 5}});
}

inline ghcut::Graph k4_unit() {
    return ghcut::Graph::build(
        4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
}

inline ghcut::Graph path_unit(int n) {
    std::vector<ghcut::RawEdge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return ghcut::Graph::build(n, e);
}

inline ghcut::Graph cycle_unit(int n) {
    std::vector<ghcut::RawEdge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
    return ghcut::Graph::build(n, e);
}

inline ghcut::Graph star_unit(int leaves) {  // center is vertex 0
    std::vector<ghcut::RawEdge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i, 1});
    return ghcut::Graph::build(leaves + 1, e);
}

}  // namespace testutil
