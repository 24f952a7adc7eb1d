#pragma once

#include <cstdint>
#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

// A subgraph (edge ids of g) in which the terminal set is connected.
struct SteinerSubgraph {
    std::vector<int> edge_ids;        // sorted
    std::vector<VertexId> terminals;  // U it spans, sorted
};

// Fractional packing of Steiner subgraphs. Feasible: for every edge e,
// sum of values over subgraphs containing e is at most w(e).
struct Packing {
    std::vector<SteinerSubgraph> subgraphs;
    std::vector<double> values;  // aligned with subgraphs
    double total_value = 0.0;
    double scale_denominator = 0.0;  // log_{1+eps}((1+eps)/delta)
    long long iterations = 0;
};

// Guide tree: a tree whose nodes are either real (carrying a graph vertex) or
// fake. Node ids are local indices, so fake ids never collide with vertex ids.
struct GuideTree {
    std::vector<VertexId> node_vertex;   // vertex of node i, or -1 if fake
    std::vector<std::vector<int>> adj;   // tree adjacency over node indices
    int source = -1;                     // node index of the source s

    int add_real(VertexId v);
    int add_fake();
    void add_edge(int a, int b);
    bool real(int node) const { return node_vertex[node] >= 0; }
    int num_nodes() const { return static_cast<int>(node_vertex.size()); }
    std::vector<VertexId> real_vertices() const;  // sorted
};

// Mehlhorn's 2-approximate Steiner tree under the given per-edge lengths:
// super-source shortest paths to find each vertex's closest terminal, helper
// graph on terminals, MST, witness-path expansion, non-terminal leaf pruning.
// Output is a tree spanning U of length at most twice the optimum. Throws if
// the terminals are not in one component (message names the stranded terminal).
SteinerSubgraph mehlhorn_steiner(const Graph& g, const std::vector<double>& lengths,
                                 const std::vector<VertexId>& terminals);

// Width-independent MWU packing of U-Steiner subgraphs:
//   delta = (2m)^(-1/eps); l(e) = delta/w(e)
//   while sum w(e) l(e) < 1: H = 2-approx Steiner tree under l;
//     v = min edge weight in H; add (H, v); l(e) *= 1 + eps*v/w(e) for e in H
//   scale all values by 1/log_{1+eps}((1+eps)/delta)
// The result is feasible and has total_value >= lambda(U)/(4+O(eps)).
// Requires |U| >= 2, terminals connected, eps in [0.02, 0.5).
Packing mwu_pack(const Graph& g, const std::vector<VertexId>& terminals, double eps);

// Sample `trials` subgraphs from a packing i.i.d. proportionally to value,
// reduce each to a tree (spanning tree, then prune non-terminal leaves), and
// return them as guide trees rooted at source s. With ~300 ln n trials, w.h.p.
// for each t in U some returned tree 4-respects some (s,t)-mincut.
std::vector<GuideTree> sample_guide_trees(const Graph& g,
                                          const std::vector<VertexId>& terminals,
                                          VertexId s, int trials, std::uint64_t seed,
                                          double eps = 0.1);

// Default trial count from the analysis: ceil(300 ln n).
int default_guide_tree_trials(int n);

}  // namespace ghcut
