#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

// Cut-Threshold oracle: all v with lambda(s,v) <= lambda_bar. The default
// strategy answers by per-vertex max-flow, memoized per source across queries;
// a faster implementation can be slotted in behind the same interface.
class CutThresholdOracle {
public:
    explicit CutThresholdOracle(const Graph& g) : g_(g) {}

    // lambda(s,v), memoized.
    Weight lambda(VertexId s, VertexId v);

    // { v != s : lambda(s,v) <= lambda_bar } over all of V.
    std::vector<VertexId> cut_threshold(VertexId s, Weight lambda_bar);

    const Graph& graph() const { return g_; }

private:
    const Graph& g_;
    std::map<std::pair<VertexId, VertexId>, Weight> memo_;
    std::mutex mu_;
};

// lambda_max = max over t in U of lambda(s,t), plus every argmax terminal
// (sorted). Binary search over thresholds in [0, total_weight], then one
// threshold call at lambda_max - 1 to separate the argmax set. s must not be
// in U; empty U rejected.
std::pair<Weight, std::vector<VertexId>> max_terminal_mincut(
    CutThresholdOracle& o, const std::vector<VertexId>& terminals, VertexId s);

// lambda(U) = min over a,b in U of lambda(a,b), via |U|-1 flows from a fixed
// terminal. |U| < 2 rejected.
Weight steiner_mincut(const Graph& g, const std::vector<VertexId>& terminals);

// Single-source mincut estimates with a (1+epsilon) sandwich guarantee. The
// default is exact (epsilon 0): one max-flow per target.
class SsmcApproxOracle {
public:
    virtual ~SsmcApproxOracle() = default;
    virtual double epsilon() const { return 0.0; }
    // Estimates lambda(s,v) for each requested target v != s.
    virtual std::vector<double> estimate(const Graph& g, VertexId s,
                                         const std::vector<VertexId>& targets);
};

// Estimates for every v in V \ {s}, as a dense vector indexed by vertex
// (entry s is -1).
std::vector<double> approx_single_source_mincuts(SsmcApproxOracle& o, const Graph& g,
                                                 VertexId s);

}  // namespace ghcut
