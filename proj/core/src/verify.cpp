#include "ghcut/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ghcut/maxflow.hpp"

namespace ghcut {

std::vector<std::vector<Weight>> apmf_bruteforce(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<Weight>> m(n, std::vector<Weight>(n, -1));
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) m[a][b] = m[b][a] = max_flow_value(g, a, b);
    return m;
}

namespace {

TreeViolation check_pair(const Graph& g, const GhTree& t, VertexId a, VertexId b) {
    TreeQueryResult q = tree_query(t, a, b);
    Weight lam = max_flow_value(g, a, b);
    TreeViolation v;
    if (q.value != lam) {
        v = {false, a, b, lam, q.value, "tree path value differs from lambda"};
        return v;
    }
    Weight cut = g.cut_value(q.cut.side);
    if (cut != lam) {
        v = {false, a, b, lam, cut, "f-preimage side does not achieve lambda"};
        return v;
    }
    return v;
}

}  // namespace

TreeViolation validate_ghtree(const Graph& g, const GhTree& t, int exact_max_terminals,
                              int spot_checks, std::uint64_t seed) {
    const int k = static_cast<int>(t.terminals.size());
    if (k <= 1) return {};
    if (static_cast<int>(t.edges.size()) != k - 1)
        return {false, -1, -1, k - 1, static_cast<Weight>(t.edges.size()),
                "wrong edge count"};
    for (VertexId u : t.terminals)
        if (t.f[u] != u) return {false, u, -1, u, t.f[u], "f not identity on terminals"};

    if (k <= exact_max_terminals) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                TreeViolation v = check_pair(g, t, t.terminals[i], t.terminals[j]);
                if (!v.ok) return v;
            }
        return {};
    }
    std::mt19937_64 rng(seed);
    for (int c = 0; c < spot_checks; ++c) {
        int i = static_cast<int>(rng() % k), j = static_cast<int>(rng() % (k - 1));
        if (j >= i) ++j;
        TreeViolation v = check_pair(g, t, t.terminals[i], t.terminals[j]);
        if (!v.ok) return v;
    }
    return {};
}

RespectResult check_k_respecting(const GuideTree& t, const std::vector<VertexId>& side,
                                 int k) {
    const int n = t.num_nodes();
    RespectResult r;
    if (n == 0) {
        r.respects = true;
        return r;
    }
    auto member = [&](VertexId v) {
        return std::find(side.begin(), side.end(), v) != side.end();
    };

    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::array<int, 2>> dp(n, {0, 0});
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : t.adj[order[i]])
            if (parent[u] == -2) {
                parent[u] = order[i];
                order.push_back(u);
            }

    // choice[v][p] = best placement of child v given parent placement p.
    std::vector<std::array<int8_t, 2>> choice(n, {0, 0});
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (t.real(v)) {
            int forced = member(t.node_vertex[v]) ? 1 : 0;
            dp[v][1 - forced] = inf;
        }
        if (parent[v] >= 0) {
            int p = parent[v];
            for (int ps = 0; ps < 2; ++ps) {
                int c0 = dp[v][0] + (ps != 0), c1 = dp[v][1] + (ps != 1);
                if (std::min(c0, c1) >= inf) continue;
                if (c0 <= c1) {
                    dp[p][ps] += c0;
                    choice[v][ps] = 0;
                } else {
                    dp[p][ps] += c1;
                    choice[v][ps] = 1;
                }
            }
        }
    }
    int root_side = dp[0][0] <= dp[0][1] ? 0 : 1;
    r.crossing = dp[0][root_side];
    r.respects = r.crossing <= k;
    r.assignment.assign(n, 0);
    r.assignment[0] = root_side;
    for (std::size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        r.assignment[v] = choice[v][r.assignment[parent[v]]];
    }
    return r;
}

std::pair<double, std::vector<int>> brute_min_steiner_tree(
    const Graph& g, const std::vector<double>& lengths,
    const std::vector<VertexId>& terminals) {
    const int n = g.num_vertices();
    if (n > 14 || terminals.size() > 6)
        throw std::invalid_argument("brute_min_steiner_tree: enumeration budget exceeded");
    if (terminals.size() < 2) {
        if (terminals.size() < 1) throw std::invalid_argument("need terminals");
        return {0.0, {}};
    }
    unsigned umask = 0;
    for (VertexId t : terminals) umask |= 1u << t;

    std::vector<int> eids(g.num_edges());
    std::iota(eids.begin(), eids.end(), 0);
    std::sort(eids.begin(), eids.end(),
              [&](int a, int b) { return lengths[a] != lengths[b] ? lengths[a] < lengths[b]
                                                                  : a < b; });

    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_edges;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if ((mask & umask) != umask) continue;
        // MST of the induced subgraph; must span the whole subset.
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return comp[x] == x ? x : comp[x] = find(comp[x]);
        };
        double total = 0.0;
        std::vector<int> used;
        int need = __builtin_popcount(mask) - 1;
        for (int id : eids) {
            if (need == 0) break;
            const Edge& e = g.edge(id);
            if (!(mask >> e.u & 1) || !(mask >> e.v & 1)) continue;
            int a = find(e.u), b = find(e.v);
            if (a == b) continue;
            comp[a] = b;
            total += lengths[id];
            used.push_back(id);
            --need;
        }
        if (need != 0) continue;
        if (total < best) {
            best = total;
            best_edges = used;
        }
    }
    if (!std::isfinite(best))
        throw std::invalid_argument("brute_min_steiner_tree: terminals disconnected");
    std::sort(best_edges.begin(), best_edges.end());
    return {best, best_edges};
}

}  // namespace ghcut
