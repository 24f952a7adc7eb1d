#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ghcut {

using VertexId = int;
using Weight = std::int64_t;

// Default cap on edge weights; keeps any cut value well inside int64.
inline constexpr Weight kMaxWeight = Weight(1) << 30;

struct RawEdge {
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;
};

// One side of a bipartition plus its cut value delta(side).
struct Cut {
    std::vector<VertexId> side;  // sorted
    Weight value = 0;
};

/// Immutable weighted undirected graph. Parallel input edges are merged at
/// construction, self-loops dropped (counted), edges sorted by endpoints.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on w <= 0, w > max_weight, or id out of range.
    static Graph build(int n, const std::vector<RawEdge>& raw,
                       Weight max_weight = kMaxWeight);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }

    // (neighbor, edge id) pairs.
    const std::vector<std::pair<VertexId, int>>& neighbors(VertexId v) const {
        return adj_[v];
    }

    Weight total_weight() const { return total_weight_; }
    Weight max_weight() const { return max_weight_; }
    int dropped_self_loops() const { return dropped_self_loops_; }

    // delta(side). Throws if side is empty or the whole vertex set.
    Weight cut_value(const std::vector<VertexId>& side) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, int>>> adj_;
    Weight total_weight_ = 0;
    Weight max_weight_ = kMaxWeight;
    int dropped_self_loops_ = 0;
};

// Provenance of a contraction: origin[x] = original vertices represented by
// contracted vertex x; image[v] = contracted representative of original v.
struct ContractionMap {
    std::vector<std::vector<VertexId>> origin;
    std::vector<VertexId> image;

    // Expand a side of the contracted graph to the original vertex set.
    std::vector<VertexId> expand(const std::vector<VertexId>& contracted_side) const;
};

// Contract each block to a single vertex; vertices outside every block become
// singletons. Blocks must be pairwise disjoint. Cut values are preserved under
// expand().
std::pair<Graph, ContractionMap> contract(const Graph& g,
                                          const std::vector<std::vector<VertexId>>& blocks);

}  // namespace ghcut
