#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghcut/ghtree.hpp"
#include "ghcut/graph.hpp"
#include "ghcut/packing.hpp"

namespace ghcut {

// Full all-pairs max-flow by n-choose-2 flows. Diagonal entries are -1.
std::vector<std::vector<Weight>> apmf_bruteforce(const Graph& g);

struct TreeViolation {
    bool ok = true;
    VertexId a = -1, b = -1;
    Weight expected = 0, got = 0;
    std::string what;
};

// Checks, for terminal pairs, that the tree-path minimum equals lambda(a,b)
// and that the f-preimage side achieves that value in g. All pairs when
// |U| <= exact_max_terminals; otherwise spot_checks random pairs.
TreeViolation validate_ghtree(const Graph& g, const GhTree& t,
                              int exact_max_terminals = 60, int spot_checks = 200,
                              std::uint64_t seed = 1);

struct RespectResult {
    bool respects = false;
    int crossing = 0;
    std::vector<int> assignment;  // per tree node: 1 if placed on the side
};

// Minimum number of tree edges cut by the side over all placements of fake
// vertices, by bottom-up tree DP; respects = (minimum <= k).
RespectResult check_k_respecting(const GuideTree& t, const std::vector<VertexId>& side,
                                 int k);

// Exact minimum Steiner tree by enumeration over vertex supersets of U with an
// MST per subset. Budget: n <= 14 and |U| <= 6. Returns (length, edge ids).
std::pair<double, std::vector<int>> brute_min_steiner_tree(
    const Graph& g, const std::vector<double>& lengths,
    const std::vector<VertexId>& terminals);

}  // namespace ghcut
