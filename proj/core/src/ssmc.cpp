#include "ghcut/ssmc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ghcut/isolating.hpp"
#include "ghcut/maxflow.hpp"
#include "ghcut/stats.hpp"

namespace ghcut {

namespace {

// Internal tree: real nodes carry a vertex of the *current* (possibly
// contracted) graph plus a terminal label (tid) used to key the global
// estimate map. Contraction labels and relabeled sources get fresh tids.
struct WNode {
    VertexId v = -1;     // vertex in the current graph; -1 for fake nodes
    long long tid = -1;  // estimate key; -1 for fake nodes
};

struct WTree {
    std::vector<WNode> nodes;
    std::vector<std::vector<int>> adj;
    int source = -1;  // node index

    int real_count() const {
        int c = 0;
        for (const WNode& n : nodes) c += n.v >= 0;
        return c;
    }
};

struct FlowMemo {
    std::map<std::pair<VertexId, VertexId>, Weight> m;
};

Weight mf(const Graph& g, FlowMemo& memo, VertexId a, VertexId b) {
    auto key = std::minmax(a, b);
    auto it = memo.m.find({key.first, key.second});
    if (it != memo.m.end()) return it->second;
    Weight val = max_flow_value(g, a, b);
    memo.m[{key.first, key.second}] = val;
    return val;
}

struct Ctx {
    const SsmcConfig& cfg;
    std::map<long long, Weight> est;
    long long next_tid = 0;
    std::mt19937_64 rng;

    void update(long long tid, Weight x) {
        auto it = est.find(tid);
        if (it == est.end() || x < it->second) est[tid] = x;
    }
};

// BFS order + parents from a root.
void root_tree(const WTree& t, int root, std::vector<int>& parent, std::vector<int>& order) {
    parent.assign(t.nodes.size(), -2);
    order.clear();
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : t.adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                order.push_back(u);
            }
    }
}

// Induce the subtree on a kept node set; remap[old] = new index or -1.
WTree induce(const WTree& t, const std::vector<char>& keep, std::vector<int>& remap) {
    WTree out;
    remap.assign(t.nodes.size(), -1);
    for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
        if (keep[i]) {
            remap[i] = static_cast<int>(out.nodes.size());
            out.nodes.push_back(t.nodes[i]);
            out.adj.emplace_back();
        }
    for (int a = 0; a < static_cast<int>(t.nodes.size()); ++a) {
        if (!keep[a]) continue;
        for (int b : t.adj[a])
            if (keep[b] && a < b) {
                out.adj[remap[a]].push_back(remap[b]);
                out.adj[remap[b]].push_back(remap[a]);
            }
    }
    return out;
}

int find_centroid(const WTree& t, int root) {
    std::vector<int> parent, order;
    root_tree(t, root, parent, order);
    const int total = t.real_count();
    std::vector<int> cnt(t.nodes.size(), 0), depth(t.nodes.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (parent[v] >= 0) depth[v] = depth[parent[v]] + 1;
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        int v = order[i];
        cnt[v] += t.nodes[v].v >= 0 ? 1 : 0;
        if (parent[v] >= 0) cnt[parent[v]] += cnt[v];
    }
    // Deepest node whose subtree holds at least half of the real vertices.
    int best = root;
    for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
        if (2 * cnt[v] < total) continue;
        if (depth[v] > depth[best] || (depth[v] == depth[best] && v < best)) best = v;
    }
    return best;
}

void worker(Ctx& ctx, const Graph& g, FlowMemo& memo, const WTree& t, int k, int depth);

void base_case(Ctx& ctx, const Graph& g, FlowMemo& memo, const WTree& t) {
    VertexId sv = t.nodes[t.source].v;
    for (const WNode& n : t.nodes)
        if (n.v >= 0 && n.v != sv) ctx.update(n.tid, mf(g, memo, sv, n.v));
}

void worker(Ctx& ctx, const Graph& g, FlowMemo& memo, const WTree& t, int k, int depth) {
    stats::note_depth(depth);
    const int s_node = t.source;
    const VertexId sv = t.nodes[s_node].v;
    const int reals = t.real_count();
    if (reals < 2) return;

    // Step 1: base case. Two real vertices are always solved directly: the
    // recursion below cannot shrink such an instance.
    if (reals <= 2 || reals < ctx.cfg.base_case_size) {
        base_case(ctx, g, memo, t);
        return;
    }

    // Step 2: centroid; if real and distinct from s, one direct flow.
    const int c = find_centroid(t, s_node);
    if (t.nodes[c].v >= 0 && t.nodes[c].v != sv)
        ctx.update(t.nodes[c].tid, mf(g, memo, sv, t.nodes[c].v));

    // Step 3: isolating cuts on the real sets of c's subtrees (plus {c} if
    // real, whose cut is discarded).
    std::vector<int> parent, order;
    root_tree(t, c, parent, order);
    std::vector<int> comp(t.nodes.size(), -1);  // child-subtree id per node
    std::vector<int> subtree_root;              // node index u_i per subtree
    for (std::size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        if (parent[v] == c) {
            comp[v] = static_cast<int>(subtree_root.size());
            subtree_root.push_back(v);
        } else {
            comp[v] = comp[parent[v]];
        }
    }

    const int raw_subtrees = static_cast<int>(subtree_root.size());
    std::vector<std::vector<VertexId>> sets;      // isolating-cut terminal sets
    std::vector<int> set_subtree;                 // raw subtree id per set
    for (int i = 0; i < raw_subtrees; ++i) {
        std::vector<VertexId> reals_i;
        for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
            if (comp[v] == i && t.nodes[v].v >= 0) reals_i.push_back(t.nodes[v].v);
        if (reals_i.empty()) continue;  // ignore subtrees without real vertices
        sets.push_back(std::move(reals_i));
        set_subtree.push_back(i);
    }
    const bool c_real = t.nodes[c].v >= 0;
    if (c_real) sets.push_back({t.nodes[c].v});

    if (sets.size() < 2) {  // degenerate shape; direct flows are always safe
        base_case(ctx, g, memo, t);
        return;
    }
    std::vector<Cut> iso = isolating_cuts(g, sets);

    // Step 4: per-subtree contraction and recursion at the same k.
    const int n = g.num_vertices();
    int s_subtree = s_node == c ? -1 : comp[s_node];
    for (std::size_t si = 0; si < set_subtree.size(); ++si) {
        const Cut& cut = iso[si];
        const int sub = set_subtree[si];
        std::vector<char> in_side(n, 0);
        for (VertexId x : cut.side) in_side[x] = 1;
        std::vector<VertexId> complement;
        for (VertexId x = 0; x < n; ++x)
            if (!in_side[x]) complement.push_back(x);
        auto [gi, cmap] = contract(g, {complement});
        VertexId contracted = cmap.image[complement[0]];
        const bool s_inside = in_side[sv];

        std::vector<char> keep(t.nodes.size(), 0);
        for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
            if (comp[v] == sub) keep[v] = 1;
        std::vector<int> remap;
        WTree ti = induce(t, keep, remap);
        for (WNode& nd : ti.nodes)
            if (nd.v >= 0) nd.v = cmap.image[nd.v];
        int attach = static_cast<int>(ti.nodes.size());
        long long fresh_tid = ctx.next_tid++;
        ti.nodes.push_back({contracted, fresh_tid});
        ti.adj.emplace_back();
        ti.adj[attach].push_back(remap[subtree_root[sub]]);
        ti.adj[remap[subtree_root[sub]]].push_back(attach);
        ti.source = s_inside ? remap[s_node] : attach;

        FlowMemo memo_i;
        if (complement.size() < 2 && ti.real_count() >= reals)
            base_case(ctx, gi, memo_i, ti);  // no shrink possible; stay safe
        else
            worker(ctx, gi, memo_i, ti, k, depth + 1);

        if (s_inside) {
            // lambda'(s, c_i) is a valid (s,t)-cut value for every real
            // vertex outside this subtree.
            auto it = ctx.est.find(fresh_tid);
            if (it != ctx.est.end()) {
                for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
                    if (t.nodes[v].v >= 0 && comp[v] != sub && v != s_node)
                        ctx.update(t.nodes[v].tid, it->second);
            }
        }
    }

    if (k <= 1) return;

    // Step 5: half-sample subtrees (always keeping s's subtree) and recurse
    // at k-1, for ceil(factor * ln n) independent trials.
    int trials = static_cast<int>(
        std::ceil(ctx.cfg.sampling_trials_factor * std::log(std::max(n, 2))));
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<char> keep(t.nodes.size(), 0);
        keep[c] = 1;
        std::vector<char> take(raw_subtrees, 0);
        for (int i = 0; i < raw_subtrees; ++i)
            take[i] = (i == s_subtree) || (ctx.rng() & 1);
        for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
            if (comp[v] >= 0 && take[comp[v]]) keep[v] = 1;
        std::vector<int> remap;
        WTree t5 = induce(t, keep, remap);
        t5.source = remap[s_node];
        if (t5.source < 0 || t5.real_count() < 2) continue;
        worker(ctx, g, memo, t5, k - 1, depth + 1);
    }

    // Step 6: only when s != c. Find the maximum lambda(s,t) outside s's
    // subtree, relabel one argmax terminal as the new source, drop T_s, and
    // recurse at k-1.
    if (s_node != c) {
        std::vector<VertexId> terms;
        for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
            if (t.nodes[v].v >= 0 && comp[v] != s_subtree && v != c) terms.push_back(t.nodes[v].v);
        if (c_real) terms.push_back(t.nodes[c].v);
        if (!terms.empty()) {
            CutThresholdOracle thr(g);
            auto [lmax, argmax] = max_terminal_mincut(thr, terms, sv);
            std::vector<char> is_arg(n, 0);
            for (VertexId x : argmax) is_arg[x] = 1;
            int s6 = -1;
            for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v) {
                if (t.nodes[v].v < 0 || comp[v] == s_subtree) continue;
                if (v == s_node) continue;
                if (is_arg[t.nodes[v].v]) {
                    ctx.update(t.nodes[v].tid, lmax);
                    if (s6 < 0 || t.nodes[v].v < t.nodes[s6].v) s6 = v;
                }
            }
            if (s6 >= 0) {
                std::vector<char> keep(t.nodes.size(), 1);
                for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
                    if (comp[v] == s_subtree) keep[v] = 0;
                std::vector<int> remap;
                WTree t6 = induce(t, keep, remap);
                t6.source = remap[s6];
                // The pair-keyed flow cache stays valid under the new source.
                if (t6.real_count() >= 2) worker(ctx, g, memo, t6, k - 1, depth + 1);
            }
        }
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

int centroid(const GuideTree& t) {
    if (t.num_nodes() == 0) throw std::invalid_argument("centroid: empty tree");
    WTree w;
    for (int i = 0; i < t.num_nodes(); ++i) {
        w.nodes.push_back({t.node_vertex[i], t.node_vertex[i] >= 0 ? t.node_vertex[i] : -1});
        w.adj.push_back(t.adj[i]);
    }
    return find_centroid(w, 0);
}

Estimates ssmc_guided(const Graph& g, const GuideTree& t, VertexId s, int k,
                      const SsmcConfig& cfg) {
    WTree w;
    int s_node = -1;
    for (int i = 0; i < t.num_nodes(); ++i) {
        VertexId v = t.node_vertex[i];
        w.nodes.push_back({v, v >= 0 ? static_cast<long long>(v) : -1});
        w.adj.push_back(t.adj[i]);
        if (v == s) s_node = i;
    }
    if (s_node < 0) throw std::invalid_argument("ssmc_guided: s is not a real vertex of T");
    w.source = s_node;

    Ctx ctx{cfg};
    ctx.next_tid = g.num_vertices();
    ctx.rng.seed(cfg.seed);
    FlowMemo memo;
    worker(ctx, g, memo, w, std::max(k, 1), 0);

    Estimates out;
    for (const WNode& n : w.nodes)
        if (n.v >= 0 && n.v != s) {
            auto it = ctx.est.find(n.tid);
            if (it != ctx.est.end()) out[n.v] = it->second;
        }
    return out;
}

Estimates sstm_promise(const Graph& g, const std::vector<VertexId>& terminals,
                       VertexId s, const SsmcConfig& cfg) {
    if (terminals.size() < 2) throw std::invalid_argument("sstm_promise needs |U| >= 2");
    Estimates out;

    // Terminals in other components have value 0; keep the rest.
    std::vector<int> comp(g.num_vertices(), -1);
    {
        int nc = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if (comp[v] != -1) continue;
            std::vector<VertexId> stack{v};
            comp[v] = nc;
            while (!stack.empty()) {
                VertexId x = stack.back();
                stack.pop_back();
                for (auto [u, id] : g.neighbors(x))
                    if (comp[u] == -1) {
                        comp[u] = nc;
                        stack.push_back(u);
                    }
            }
            ++nc;
        }
    }
    std::vector<VertexId> live;
    for (VertexId t : terminals) {
        if (t == s) continue;
        if (comp[t] != comp[s])
            out[t] = 0;
        else
            live.push_back(t);
    }
    if (live.empty()) return out;

    // Small instances: solve directly, one flow per terminal.
    if (static_cast<int>(live.size()) + 1 <= cfg.base_case_size) {
        for (VertexId t : live) out[t] = max_flow_value(g, s, t);
        return out;
    }

    const int n = g.num_vertices();
    int trees = cfg.guide_trees > 0
                    ? cfg.guide_trees
                    : static_cast<int>(std::ceil(3.0 * std::log(std::max(n, 2))));
    int trials5 = static_cast<int>(
        std::ceil(cfg.sampling_trials_factor * std::log(std::max(n, 2))));
    int k = std::max(cfg.k, 1);
    if (cfg.guided_branch_budget > 0) {
        // Keep trees * (trials5+1)^(k-1) within budget; lowering k only makes
        // estimates more conservative, which downstream validation absorbs.
        while (k > 1) {
            long long branch = trees;
            for (int i = 1; i < k && branch <= cfg.guided_branch_budget; ++i)
                branch *= trials5 + 1;
            if (branch <= cfg.guided_branch_budget) break;
            --k;
        }
    }

    std::vector<VertexId> u_live = live;
    u_live.push_back(s);
    std::sort(u_live.begin(), u_live.end());
    std::vector<GuideTree> guides = sample_guide_trees(
        g, u_live, s, trees, derive_seed(cfg.seed, 0x67756964), cfg.pack_epsilon);

    Estimates merged;
    for (std::size_t i = 0; i < guides.size(); ++i) {
        SsmcConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, i + 1);
        Estimates e = ssmc_guided(g, guides[i], s, k, sub);
        for (auto [v, val] : e) {
            auto it = merged.find(v);
            if (it == merged.end() || val < it->second) merged[v] = val;
        }
    }
    for (VertexId t : live) {
        auto it = merged.find(t);
        // Every guide tree spans all live terminals, so this always resolves;
        // fall back to a direct flow if a degenerate tree missed one.
        out[t] = it != merged.end() ? it->second : max_flow_value(g, s, t);
    }
    return out;
}

Estimates sstm_no_promise(const Graph& g, const std::vector<VertexId>& terminals,
                          VertexId s, const SsmcConfig& cfg) {
    Estimates out;
    std::vector<VertexId> targets;
    for (VertexId t : terminals)
        if (t != s) targets.push_back(t);
    if (targets.empty()) return out;

    SsmcApproxOracle exact;
    SsmcApproxOracle* oracle = cfg.approx_oracle ? cfg.approx_oracle : &exact;
    std::vector<double> approx = oracle->estimate(g, s, targets);

    // Bucket by (1.01)^i; each bucket satisfies the 1.1-promise.
    const double eps = 0.01;
    std::map<long long, std::vector<VertexId>> buckets;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (approx[i] <= 0.0) {
            out[targets[i]] = 0;  // approximation sandwich forces lambda = 0
            continue;
        }
        long long b = static_cast<long long>(
            std::floor(std::log(approx[i]) / std::log1p(eps)));
        buckets[b].push_back(targets[i]);
    }

    std::uint64_t salt = 0;
    for (auto& [b, vs] : buckets) {
        if (vs.size() == 1 || static_cast<int>(vs.size()) + 1 <= cfg.base_case_size) {
            for (VertexId t : vs) out[t] = max_flow_value(g, s, t);
            continue;
        }
        std::vector<VertexId> u = vs;
        u.push_back(s);
        SsmcConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0xb0c0 + salt++);
        Estimates e = sstm_promise(g, u, s, sub);
        for (auto [v, val] : e) out[v] = val;
    }
    return out;
}

}  // namespace ghcut
