#include "ghcut/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace ghcut {

int GuideTree::add_real(VertexId v) {
    node_vertex.push_back(v);
    adj.emplace_back();
    return num_nodes() - 1;
}

int GuideTree::add_fake() {
    node_vertex.push_back(-1);
    adj.emplace_back();
    return num_nodes() - 1;
}

void GuideTree::add_edge(int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
}

std::vector<VertexId> GuideTree::real_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v : node_vertex)
        if (v >= 0) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Prune degree-1 non-terminal vertices from an edge set until none remain.
std::vector<int> prune_non_terminal_leaves(const Graph& g, std::vector<int> edge_ids,
                                           const std::vector<char>& is_term) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> inc(n);
    std::vector<char> alive(g.num_edges(), 0);
    for (int id : edge_ids) {
        alive[id] = 1;
        inc[g.edge(id).u].push_back(id);
        inc[g.edge(id).v].push_back(id);
    }
    std::vector<int> deg(n, 0);
    for (int id : edge_ids) {
        ++deg[g.edge(id).u];
        ++deg[g.edge(id).v];
    }
    std::queue<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] == 1 && !is_term[v]) q.push(v);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (deg[v] != 1 || is_term[v]) continue;
        for (int id : inc[v]) {
            if (!alive[id]) continue;
            alive[id] = 0;
            VertexId u = g.edge(id).u ^ g.edge(id).v ^ v;
            --deg[v];
            --deg[u];
            if (deg[u] == 1 && !is_term[u]) q.push(u);
        }
    }
    std::vector<int> out;
    for (int id : edge_ids)
        if (alive[id]) out.push_back(id);
    return out;
}

}  // namespace

SteinerSubgraph mehlhorn_steiner(const Graph& g, const std::vector<double>& lengths,
                                 const std::vector<VertexId>& terminals) {
    const int n = g.num_vertices();
    if (terminals.size() < 2) throw std::invalid_argument("mehlhorn_steiner needs |U| >= 2");
    if (static_cast<int>(lengths.size()) != g.num_edges())
        throw std::invalid_argument("mehlhorn_steiner: lengths size mismatch");
    std::vector<char> is_term(n, 0);
    for (VertexId t : terminals) is_term[t] = 1;

    // Super-source Dijkstra: dist to the closest terminal, which one, and the
    // incoming edge of the witness path. Ties broken toward the lowest
    // terminal id, then lowest vertex id, for determinism.
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<VertexId> near(n, -1);
    std::vector<int> par_edge(n, -1);
    using Item = std::tuple<double, VertexId, VertexId>;  // (dist, near, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (VertexId t : terminals) {
        dist[t] = 0.0;
        near[t] = t;
        pq.push({0.0, t, t});
    }
    while (!pq.empty()) {
        auto [d, nr, v] = pq.top();
        pq.pop();
        if (d > dist[v] || (d == dist[v] && nr > near[v])) continue;
        for (auto [u, id] : g.neighbors(v)) {
            double nd = d + lengths[id];
            if (nd < dist[u] || (nd == dist[u] && nr < near[u])) {
                dist[u] = nd;
                near[u] = nr;
                par_edge[u] = id;
                pq.push({nd, nr, u});
            }
        }
    }
    for (VertexId t : terminals)
        if (near[t] != t) throw std::logic_error("mehlhorn_steiner: bad voronoi");

    // Helper graph on terminals: one candidate edge per original edge that
    // crosses voronoi regions, weighted by the length of its witness path.
    std::vector<int> tindex(n, -1);
    for (int i = 0; i < static_cast<int>(terminals.size()); ++i) tindex[terminals[i]] = i;
    std::vector<std::tuple<double, int, int, int>> helper;  // (len, edge id, ta, tb)
    for (int id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        if (near[e.u] < 0 || near[e.v] < 0 || near[e.u] == near[e.v]) continue;
        helper.push_back({dist[e.u] + lengths[id] + dist[e.v], id, tindex[near[e.u]],
                          tindex[near[e.v]]});
    }
    std::sort(helper.begin(), helper.end(),
              [](const auto& a, const auto& b) {
                  return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                          : std::get<1>(a) < std::get<1>(b);
              });

    DSU dsu(static_cast<int>(terminals.size()));
    std::set<int> picked;
    int joins = 0;
    for (const auto& [len, id, ta, tb] : helper) {
        if (!dsu.unite(ta, tb)) continue;
        ++joins;
        // Expand the helper edge into its witness path.
        picked.insert(id);
        for (VertexId x : {g.edge(id).u, g.edge(id).v})
            for (VertexId w = x; near[w] != w; ) {
                picked.insert(par_edge[w]);
                const Edge& pe = g.edge(par_edge[w]);
                w = pe.u ^ pe.v ^ w;
            }
    }
    if (joins + 1 < static_cast<int>(terminals.size())) {
        for (VertexId t : terminals)
            if (dsu.find(tindex[t]) != dsu.find(tindex[terminals[0]]))
                throw std::invalid_argument("mehlhorn_steiner: terminal " + std::to_string(t) +
                                            " is disconnected from the rest");
    }

    // The union of witness paths can contain cycles under ties; keep a
    // minimum-length spanning forest of it, then prune non-terminal leaves.
    std::vector<std::pair<double, int>> cand;
    for (int id : picked) cand.push_back({lengths[id], id});
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    DSU span(n);
    std::vector<int> tree_edges;
    for (auto [len, id] : cand)
        if (span.unite(g.edge(id).u, g.edge(id).v)) tree_edges.push_back(id);

    SteinerSubgraph out;
    out.edge_ids = prune_non_terminal_leaves(g, tree_edges, is_term);
    std::sort(out.edge_ids.begin(), out.edge_ids.end());
    out.terminals = terminals;
    std::sort(out.terminals.begin(), out.terminals.end());
    return out;
}

Packing mwu_pack(const Graph& g, const std::vector<VertexId>& terminals, double eps) {
    if (terminals.size() < 2) throw std::invalid_argument("mwu_pack needs |U| >= 2");
    if (eps < 0.02 || eps >= 0.5)
        throw std::invalid_argument("mwu_pack: eps must be in [0.02, 0.5)");
    const int m = g.num_edges();
    if (m == 0) throw std::invalid_argument("mwu_pack: empty graph");

    const double delta = std::pow(2.0 * m, -1.0 / eps);
    std::vector<double> len(m);
    for (int id = 0; id < m; ++id) len[id] = delta / static_cast<double>(g.edge(id).w);

    Packing p;
    auto potential = [&] {
        double s = 0.0;
        for (int id = 0; id < m; ++id) s += static_cast<double>(g.edge(id).w) * len[id];
        return s;
    };
    while (potential() < 1.0) {
        SteinerSubgraph h = mehlhorn_steiner(g, len, terminals);
        Weight v = -1;
        for (int id : h.edge_ids)
            if (v < 0 || g.edge(id).w < v) v = g.edge(id).w;
        for (int id : h.edge_ids)
            len[id] *= 1.0 + eps * static_cast<double>(v) / static_cast<double>(g.edge(id).w);
        p.subgraphs.push_back(std::move(h));
        p.values.push_back(static_cast<double>(v));
        ++p.iterations;
    }

    p.scale_denominator = std::log((1.0 + eps) / delta) / std::log(1.0 + eps);
    for (double& v : p.values) {
        v /= p.scale_denominator;
        p.total_value += v;
    }
    return p;
}

int default_guide_tree_trials(int n) {
    return static_cast<int>(std::ceil(300.0 * std::log(std::max(n, 2))));
}

std::vector<GuideTree> sample_guide_trees(const Graph& g,
                                          const std::vector<VertexId>& terminals,
                                          VertexId s, int trials, std::uint64_t seed,
                                          double eps) {
    if (trials < 1) throw std::invalid_argument("sample_guide_trees: trials < 1");
    bool s_in = std::find(terminals.begin(), terminals.end(), s) != terminals.end();
    if (!s_in) throw std::invalid_argument("sample_guide_trees: s not in terminal set");

    Packing p = mwu_pack(g, terminals, eps);
    std::vector<double> prefix(p.values.size());
    std::partial_sum(p.values.begin(), p.values.end(), prefix.begin());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, prefix.back());
    std::vector<char> is_term(g.num_vertices(), 0);
    for (VertexId t : terminals) is_term[t] = 1;

    std::vector<GuideTree> out;
    out.reserve(trials);
    for (int trial = 0; trial < trials; ++trial) {
        std::size_t pick = std::lower_bound(prefix.begin(), prefix.end(), unif(rng)) -
                           prefix.begin();
        if (pick >= p.subgraphs.size()) pick = p.subgraphs.size() - 1;
        const SteinerSubgraph& h = p.subgraphs[pick];

        // Any spanning tree of the subgraph, then prune non-terminal leaves.
        DSU dsu(g.num_vertices());
        std::vector<int> span;
        for (int id : h.edge_ids)
            if (dsu.unite(g.edge(id).u, g.edge(id).v)) span.push_back(id);
        span = prune_non_terminal_leaves(g, span, is_term);

        GuideTree t;
        std::vector<int> node_of(g.num_vertices(), -1);
        auto node = [&](VertexId v) {
            if (node_of[v] < 0) node_of[v] = t.add_real(v);
            return node_of[v];
        };
        for (int id : span) t.add_edge(node(g.edge(id).u), node(g.edge(id).v));
        if (node_of[s] < 0) node_of[s] = t.add_real(s);  // degenerate: lone terminal
        t.source = node_of[s];
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace ghcut
