#include "ghcut/gen.hpp"

#include <algorithm>
#include <random>

namespace ghcut {

namespace {

Graph build_random(int n, int target_m, Weight max_w, std::uint64_t seed, bool connected) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> wdist(1, std::max<Weight>(max_w, 1));
    std::vector<RawEdge> edges;
    if (connected && n > 1) {
        std::vector<VertexId> perm(n);
        for (VertexId i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (VertexId i = 1; i < n; ++i) {
            std::uniform_int_distribution<VertexId> pick(0, i - 1);
            edges.push_back({perm[pick(rng)], perm[i], wdist(rng)});
        }
    }
    if (n > 1) {
        std::uniform_int_distribution<VertexId> vdist(0, n - 1);
        while (static_cast<int>(edges.size()) < target_m) {
            VertexId u = vdist(rng), v = vdist(rng);
            if (u == v) continue;
            edges.push_back({u, v, wdist(rng)});
        }
    }
    return Graph::build(n, edges);
}

}  // namespace

Graph random_connected_graph(int n, int target_m, Weight max_w, std::uint64_t seed) {
    return build_random(n, target_m, max_w, seed, true);
}

Graph random_graph(int n, int target_m, Weight max_w, std::uint64_t seed) {
    return build_random(n, target_m, max_w, seed, false);
}

}  // namespace ghcut
