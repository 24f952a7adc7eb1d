#include "ghcut/isolating.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghcut/maxflow.hpp"

namespace ghcut {

std::vector<Cut> isolating_cuts(const Graph& g,
                                const std::vector<std::vector<VertexId>>& sets) {
    const int h = static_cast<int>(sets.size());
    const int n = g.num_vertices();
    if (h < 2) throw std::invalid_argument("isolating_cuts needs at least 2 sets");
    std::vector<int> owner(n, -1);
    for (int i = 0; i < h; ++i) {
        if (sets[i].empty()) throw std::invalid_argument("isolating_cuts: empty set");
        for (VertexId v : sets[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("isolating_cuts: vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("isolating_cuts: sets overlap");
            owner[v] = i;
        }
    }

    int bits = 0;
    while ((1 << bits) < h) ++bits;

    // side_of[b][v] = 1 iff v landed on the "bit set" source side in phase b.
    std::vector<std::vector<char>> side_of(bits, std::vector<char>(n, 0));
    for (int b = 0; b < bits; ++b) {
        std::vector<VertexId> zeros, ones;
        for (int i = 0; i < h; ++i) {
            auto& dst = (i >> b & 1) ? ones : zeros;
            dst.insert(dst.end(), sets[i].begin(), sets[i].end());
        }
        auto [hg, map] = contract(g, {ones, zeros});
        VertexId src = map.image[ones[0]], snk = map.image[zeros[0]];
        FlowResult fr = max_flow(hg, src, snk);
        for (VertexId x : map.expand(fr.min_source_side.side)) side_of[b][x] = 1;
    }

    // Region of U_i: vertices agreeing with U_i's side in every phase.
    std::vector<Cut> out(h);
    for (int i = 0; i < h; ++i) {
        std::vector<char> in_region(n, 0);
        std::vector<VertexId> region;
        for (VertexId v = 0; v < n; ++v) {
            bool ok = true;
            for (int b = 0; b < bits && ok; ++b)
                ok = side_of[b][v] == ((i >> b & 1) ? 1 : 0);
            if (ok) {
                in_region[v] = 1;
                region.push_back(v);
            }
        }

        std::vector<VertexId> outside;
        for (VertexId v = 0; v < n; ++v)
            if (!in_region[v]) outside.push_back(v);
        // Other sets are outside the region, so outside is never empty.
        std::vector<std::vector<VertexId>> blocks{sets[i], outside};
        auto [hg, map] = contract(g, blocks);
        VertexId src = map.image[sets[i][0]], snk = map.image[outside[0]];
        FlowResult fr = max_flow(hg, src, snk);
        out[i].side = map.expand(fr.min_source_side.side);
        out[i].value = fr.value;
    }
    return out;
}

}  // namespace ghcut
