#include "ghcut/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ghcut {

Graph Graph::build(int n, const std::vector<RawEdge>& raw, Weight max_weight) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.max_weight_ = max_weight;

    std::map<std::pair<VertexId, VertexId>, Weight> merged;
    for (const RawEdge& e : raw) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.w <= 0) throw std::invalid_argument("edge weight must be positive");
        if (e.w > max_weight) throw std::invalid_argument("edge weight exceeds maximum");
        if (e.u == e.v) {
            ++g.dropped_self_loops_;
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        merged[{key.first, key.second}] += e.w;
    }

    g.adj_.resize(n);
    g.edges_.reserve(merged.size());
    for (const auto& [uv, w] : merged) {
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({uv.first, uv.second, w});
        g.adj_[uv.first].push_back({uv.second, id});
        g.adj_[uv.second].push_back({uv.first, id});
        g.total_weight_ += w;
    }
    return g;
}

Weight Graph::cut_value(const std::vector<VertexId>& side) const {
    if (side.empty() || static_cast<int>(side.size()) >= n_)
        throw std::invalid_argument("cut side must be a proper nonempty subset");
    std::vector<char> in(n_, 0);
    for (VertexId v : side) in[v] = 1;
    Weight total = 0;
    for (const Edge& e : edges_)
        if (in[e.u] != in[e.v]) total += e.w;
    return total;
}

std::vector<VertexId> ContractionMap::expand(const std::vector<VertexId>& contracted_side) const {
    std::vector<VertexId> out;
    for (VertexId x : contracted_side)
        out.insert(out.end(), origin[x].begin(), origin[x].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Graph, ContractionMap> contract(const Graph& g,
                                          const std::vector<std::vector<VertexId>>& blocks) {
    const int n = g.num_vertices();
    std::vector<int> block_of(n, -1);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        for (VertexId v : blocks[b]) {
            if (v < 0 || v >= n) throw std::invalid_argument("block vertex out of range");
            if (block_of[v] != -1) throw std::invalid_argument("contraction blocks overlap");
            block_of[v] = b;
        }
    }

    // New ids assigned by smallest original member, so results are independent
    // of block order.
    ContractionMap map;
    map.image.assign(n, -1);
    std::vector<int> block_new_id(blocks.size(), -1);
    for (VertexId v = 0; v < n; ++v) {
        if (map.image[v] != -1) continue;
        int id = static_cast<int>(map.origin.size());
        if (block_of[v] == -1) {
            map.origin.push_back({v});
            map.image[v] = id;
        } else {
            int b = block_of[v];
            block_new_id[b] = id;
            std::vector<VertexId> members(blocks[b]);
            std::sort(members.begin(), members.end());
            for (VertexId u : members) map.image[u] = id;
            map.origin.push_back(std::move(members));
        }
    }

    std::vector<RawEdge> raw;
    raw.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        VertexId u = map.image[e.u], v = map.image[e.v];
        if (u != v) raw.push_back({u, v, e.w});
    }
    Graph h = Graph::build(static_cast<int>(map.origin.size()), raw, g.max_weight());
    return {std::move(h), std::move(map)};
}

}  // namespace ghcut
