#pragma once

#include <cstdint>

#include "ghcut/graph.hpp"

namespace ghcut {

// Seeded random graph: a random spanning tree for connectivity plus uniformly
// random extra edges, weights uniform in [1, max_w]. target_m below n-1 is
// clamped; parallel picks merge, so the edge count can land slightly under
// target_m.
Graph random_connected_graph(int n, int target_m, Weight max_w, std::uint64_t seed);

// As above but without the spanning tree, so the result may be disconnected.
Graph random_graph(int n, int target_m, Weight max_w, std::uint64_t seed);

}  // namespace ghcut
