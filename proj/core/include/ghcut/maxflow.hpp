#pragma once

#include "ghcut/graph.hpp"

namespace ghcut {

// Exact (s,t)-max-flow answer with both canonical mincut sides.
struct FlowResult {
    Weight value = 0;
    Cut min_source_side;  // residual-reachable set from s (vertex-minimal)
    Cut max_source_side;  // complement of vertices reaching t in the residual
};

// Dinic on the antiparallel-arc model of g. Exact on 64-bit capacities.
// Both returned sides contain s, exclude t, and are certified against
// g.cut_value(). Throws std::invalid_argument if s == t or out of range.
FlowResult max_flow(const Graph& g, VertexId s, VertexId t);

// Value only; same engine, skips cut extraction/certification.
Weight max_flow_value(const Graph& g, VertexId s, VertexId t);

}  // namespace ghcut
