#include "ghcut/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghcut/maxflow.hpp"

namespace ghcut {

Weight CutThresholdOracle::lambda(VertexId s, VertexId v) {
    if (s == v) throw std::invalid_argument("lambda(s,s) undefined");
    auto key = std::minmax(s, v);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find({key.first, key.second});
        if (it != memo_.end()) return it->second;
    }
    Weight val = max_flow_value(g_, s, v);
    std::lock_guard<std::mutex> lk(mu_);
    memo_[{key.first, key.second}] = val;
    return val;
}

std::vector<VertexId> CutThresholdOracle::cut_threshold(VertexId s, Weight lambda_bar) {
    if (s < 0 || s >= g_.num_vertices())
        throw std::invalid_argument("cut_threshold: invalid source");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
        if (v != s && lambda(s, v) <= lambda_bar) out.push_back(v);
    return out;
}

std::pair<Weight, std::vector<VertexId>> max_terminal_mincut(
    CutThresholdOracle& o, const std::vector<VertexId>& terminals, VertexId s) {
    if (terminals.empty()) throw std::invalid_argument("max_terminal_mincut: empty terminal set");
    for (VertexId t : terminals)
        if (t == s) throw std::invalid_argument("max_terminal_mincut: s in terminal set");

    // Any cut value is at most the total edge weight; 0 covers disconnection.
    auto all_below = [&](Weight bar) {
        std::vector<char> in(o.graph().num_vertices(), 0);
        for (VertexId v : o.cut_threshold(s, bar)) in[v] = 1;
        for (VertexId t : terminals)
            if (!in[t]) return false;
        return true;
    };
    Weight lo = 0, hi = o.graph().total_weight();
    while (lo < hi) {
        Weight mid = lo + (hi - lo) / 2;
        if (all_below(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    Weight lambda_max = lo;

    std::vector<VertexId> argmax;
    if (lambda_max == 0) {
        argmax = terminals;  // every terminal is disconnected from s
    } else {
        std::vector<char> below(o.graph().num_vertices(), 0);
        for (VertexId v : o.cut_threshold(s, lambda_max - 1)) below[v] = 1;
        for (VertexId t : terminals)
            if (!below[t]) argmax.push_back(t);
    }
    std::sort(argmax.begin(), argmax.end());
    return {lambda_max, argmax};
}

Weight steiner_mincut(const Graph& g, const std::vector<VertexId>& terminals) {
    if (terminals.size() < 2) throw std::invalid_argument("steiner_mincut needs |U| >= 2");
    VertexId s0 = terminals[0];
    Weight best = -1;
    for (std::size_t i = 1; i < terminals.size(); ++i) {
        Weight v = max_flow_value(g, s0, terminals[i]);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

std::vector<double> SsmcApproxOracle::estimate(const Graph& g, VertexId s,
                                               const std::vector<VertexId>& targets) {
    std::vector<double> out;
    out.reserve(targets.size());
    for (VertexId t : targets) out.push_back(static_cast<double>(max_flow_value(g, s, t)));
    return out;
}

std::vector<double> approx_single_source_mincuts(SsmcApproxOracle& o, const Graph& g,
                                                 VertexId s) {
    std::vector<VertexId> targets;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (v != s) targets.push_back(v);
    std::vector<double> est = o.estimate(g, s, targets);
    std::vector<double> dense(g.num_vertices(), -1.0);
    for (std::size_t i = 0; i < targets.size(); ++i) dense[targets[i]] = est[i];
    return dense;
}

}  // namespace ghcut
