#include "ghcut/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ghcut/stats.hpp"

namespace ghcut {

namespace {

// Standard Dinic over paired arcs; arc i's reverse is i^1. An undirected edge
// of weight w becomes two arcs of capacity w each.
struct Dinic {
    int n;
    std::vector<int> head;           // per-vertex first arc (we use arc lists)
    std::vector<std::vector<int>> arcs_of;
    std::vector<int> to;
    std::vector<Weight> cap;
    std::vector<int> level, it;

    explicit Dinic(const Graph& g) : n(g.num_vertices()), arcs_of(n) {
        to.reserve(2 * g.num_edges());
        cap.reserve(2 * g.num_edges());
        for (const Edge& e : g.edges()) {
            arcs_of[e.u].push_back(static_cast<int>(to.size()));
            to.push_back(e.v);
            cap.push_back(e.w);
            arcs_of[e.v].push_back(static_cast<int>(to.size()));
            to.push_back(e.u);
            cap.push_back(e.w);
        }
        level.assign(n, -1);
        it.assign(n, 0);
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : arcs_of[v]) {
                if (cap[a] > 0 && level[to[a]] < 0) {
                    level[to[a]] = level[v] + 1;
                    q.push(to[a]);
                }
            }
        }
        return level[t] >= 0;
    }

    Weight dfs(int v, int t, Weight f) {
        if (v == t) return f;
        for (int& i = it[v]; i < static_cast<int>(arcs_of[v].size()); ++i) {
            int a = arcs_of[v][i];
            int u = to[a];
            if (cap[a] > 0 && level[u] == level[v] + 1) {
                Weight d = dfs(u, t, std::min(f, cap[a]));
                if (d > 0) {
                    cap[a] -= d;
                    cap[a ^ 1] += d;
                    return d;
                }
            }
        }
        return 0;
    }

    Weight run(int s, int t) {
        Weight flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (Weight f = dfs(s, t, std::numeric_limits<Weight>::max())) flow += f;
        }
        return flow;
    }

    // Vertices reachable from s through positive residual arcs.
    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : arcs_of[v])
                if (cap[a] > 0 && !seen[to[a]]) {
                    seen[to[a]] = 1;
                    q.push(to[a]);
                }
        }
        return seen;
    }

    // Vertices that can reach t through positive residual arcs (walk reverse
    // arcs: v reaches u iff cap of arc u->v is positive... checked via a^1).
    std::vector<char> reaching(int t) const {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[t] = 1;
        q.push(t);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : arcs_of[v]) {
                // residual arc to[a] -> v is (a^1)
                if (cap[a ^ 1] > 0 && !seen[to[a]]) {
                    seen[to[a]] = 1;
                    q.push(to[a]);
                }
            }
        }
        return seen;
    }
};

std::vector<VertexId> side_from_mask(const std::vector<char>& in, bool keep) {
    std::vector<VertexId> side;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
        if (static_cast<bool>(in[v]) == keep) side.push_back(v);
    return side;
}

void check_st(const Graph& g, VertexId s, VertexId t) {
    if (s < 0 || s >= g.num_vertices() || t < 0 || t >= g.num_vertices())
        throw std::invalid_argument("max_flow terminal out of range");
    if (s == t) throw std::invalid_argument("max_flow requires s != t");
}

}  // namespace

FlowResult max_flow(const Graph& g, VertexId s, VertexId t) {
    check_st(g, s, t);
    stats::count_maxflow(g.num_vertices(), g.num_edges());
    Dinic d(g);
    FlowResult r;
    r.value = d.run(s, t);

    r.min_source_side.side = side_from_mask(d.reachable_from(s), true);
    r.min_source_side.value = r.value;
    r.max_source_side.side = side_from_mask(d.reaching(t), false);
    r.max_source_side.value = r.value;

    if (r.value > 0 || g.num_vertices() > 1) {
        if (g.cut_value(r.min_source_side.side) != r.value ||
            g.cut_value(r.max_source_side.side) != r.value)
            throw std::logic_error("max_flow certification failed");
    }
    return r;
}

Weight max_flow_value(const Graph& g, VertexId s, VertexId t) {
    check_st(g, s, t);
    stats::count_maxflow(g.num_vertices(), g.num_edges());
    Dinic d(g);
    return d.run(s, t);
}

}  // namespace ghcut
