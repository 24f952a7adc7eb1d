#pragma once

#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

// Minimum isolating cuts: for disjoint nonempty terminal sets U_1..U_h
// (h >= 2), returns for each i the *minimal* (U_i, union of the others)-mincut.
// Uses ceil(log2 h) bit-phase max-flows plus one flow per set on a graph with
// everything outside the set's region contracted. Returned sides are pairwise
// disjoint. Throws std::invalid_argument on h < 2 or overlapping/empty sets.
std::vector<Cut> isolating_cuts(const Graph& g,
                                const std::vector<std::vector<VertexId>>& sets);

}  // namespace ghcut
