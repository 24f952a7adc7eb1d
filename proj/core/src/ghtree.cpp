#include "ghcut/ghtree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "ghcut/isolating.hpp"
#include "ghcut/maxflow.hpp"
#include "ghcut/stats.hpp"
#include "ghcut/verify.hpp"

namespace ghcut {

namespace {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t x = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// A solved recursive instance: tree edges (in original terminal ids) plus the
// terminal assigned to every vertex of the instance graph.
struct SubTree {
    std::vector<GhTreeEdge> edges;
    std::vector<VertexId> vassign;
};

SubTree leaf(const Graph& h, VertexId orig_terminal) {
    SubTree s;
    s.vassign.assign(h.num_vertices(), orig_terminal);
    return s;
}

using Recurse = std::function<SubTree(const Graph&, const std::vector<VertexId>&,
                                      const std::vector<VertexId>&, std::uint64_t)>;

// Split an instance along disjoint part sides (pivot terminal, side), recurse
// on each part graph and on the large side, and stitch per the Combine rule:
// an edge of weight delta(S_v) between f_v(x_v) and f_large(y_v).
SubTree split_and_combine(const Graph& h, const std::vector<VertexId>& terms_h,
                          const std::vector<VertexId>& terms_orig,
                          const std::vector<std::pair<VertexId, Cut>>& parts,
                          const Recurse& recurse, std::uint64_t seed) {
    const int n = h.num_vertices();
    std::vector<int> part_of(n, -1);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p)
        for (VertexId v : parts[p].second.side) part_of[v] = p;

    std::vector<VertexId> orig_of(n, -1);
    for (std::size_t i = 0; i < terms_h.size(); ++i) orig_of[terms_h[i]] = terms_orig[i];

    // Large side: all part sides contracted.
    std::vector<std::vector<VertexId>> blocks;
    for (const auto& [v, cut] : parts) blocks.push_back(cut.side);
    auto [g_large, map_large] = contract(h, blocks);
    std::vector<VertexId> lterms_h, lterms_orig;
    for (std::size_t i = 0; i < terms_h.size(); ++i)
        if (part_of[terms_h[i]] < 0) {
            lterms_h.push_back(map_large.image[terms_h[i]]);
            lterms_orig.push_back(terms_orig[i]);
        }
    SubTree large = lterms_h.size() == 1
                        ? leaf(g_large, lterms_orig[0])
                        : recurse(g_large, lterms_h, lterms_orig, derive_seed(seed, 0));

    SubTree out;
    out.edges = large.edges;
    out.vassign.assign(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (part_of[v] < 0) out.vassign[v] = large.vassign[map_large.image[v]];

    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
        const auto& [pivot, cut] = parts[p];
        std::vector<VertexId> complement;
        for (VertexId v = 0; v < n; ++v)
            if (part_of[v] != p) complement.push_back(v);
        auto [g_v, map_v] = contract(h, {complement});
        std::vector<VertexId> pterms_h, pterms_orig;
        for (std::size_t i = 0; i < terms_h.size(); ++i)
            if (part_of[terms_h[i]] == p) {
                pterms_h.push_back(map_v.image[terms_h[i]]);
                pterms_orig.push_back(terms_orig[i]);
            }
        SubTree sub = pterms_h.size() == 1
                          ? leaf(g_v, pterms_orig[0])
                          : recurse(g_v, pterms_h, pterms_orig, derive_seed(seed, p + 1));

        for (VertexId v : cut.side) out.vassign[v] = sub.vassign[map_v.image[v]];
        out.edges.insert(out.edges.end(), sub.edges.begin(), sub.edges.end());

        VertexId x_v = map_v.image[complement[0]];
        VertexId y_v = map_large.image[cut.side[0]];
        out.edges.push_back({sub.vassign[x_v], large.vassign[y_v], cut.value});
    }
    return out;
}

SubTree classic_rec(const Graph& h, const std::vector<VertexId>& terms_h,
                    const std::vector<VertexId>& terms_orig, std::uint64_t seed) {
    if (terms_h.size() == 1) return leaf(h, terms_orig[0]);
    VertexId s = terms_h[0], t = terms_h[1];
    FlowResult fr = max_flow(h, s, t);
    std::vector<char> in_s(h.num_vertices(), 0);
    for (VertexId v : fr.min_source_side.side) in_s[v] = 1;
    Cut t_side;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (!in_s[v]) t_side.side.push_back(v);
    t_side.value = fr.value;
    return split_and_combine(h, terms_h, terms_orig, {{t, t_side}}, classic_rec, seed);
}

GhTree finish(const Graph& g, const std::vector<VertexId>& terminals, SubTree st) {
    GhTree t;
    t.terminals = terminals;
    std::sort(t.terminals.begin(), t.terminals.end());
    t.edges = std::move(st.edges);
    t.f = std::move(st.vassign);
    return t;
}

std::vector<VertexId> all_vertices(const Graph& g) {
    std::vector<VertexId> v(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) v[i] = i;
    return v;
}

}  // namespace

GhTree gomory_hu_classic(const Graph& g) {
    if (g.num_vertices() == 0) return {};
    std::vector<VertexId> u = all_vertices(g);
    if (g.num_vertices() == 1) return {{0}, {}, {0}};
    return finish(g, u, classic_rec(g, u, u, 0));
}

GhTree gusfield(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return {};
    GhTree t;
    t.terminals = all_vertices(g);
    t.f = t.terminals;
    if (n == 1) return t;

    std::vector<VertexId> par(n, 0);
    std::vector<Weight> w(n, 0);
    for (VertexId i = 1; i < n; ++i) {
        VertexId p = par[i];
        FlowResult fr = max_flow(g, i, p);
        std::vector<char> in_s(n, 0);
        for (VertexId v : fr.min_source_side.side) in_s[v] = 1;
        w[i] = fr.value;
        for (VertexId j = 0; j < n; ++j)
            if (j != i && in_s[j] && par[j] == p) par[j] = i;
        if (in_s[par[p]]) {
            par[i] = par[p];
            par[p] = i;
            w[i] = w[p];
            w[p] = fr.value;
        }
    }
    for (VertexId i = 1; i < n; ++i) t.edges.push_back({i, par[i], w[i]});
    return t;
}

StepResult ghtree_step(const Graph& g, VertexId s, const std::vector<VertexId>& terminals,
                       const GhConfig& cfg) {
    const std::size_t usz = terminals.size();
    if (usz < 2) throw std::invalid_argument("ghtree_step needs |U| >= 2");
    if (std::find(terminals.begin(), terminals.end(), s) == terminals.end())
        throw std::invalid_argument("ghtree_step: s not in U");

    std::vector<char> in_u(g.num_vertices(), 0);
    for (VertexId v : terminals) in_u[v] = 1;

    // lambda(s, v) does not change across iterations, so the single-source
    // terminal mincut call is made once for the full terminal set.
    SsmcConfig scfg = cfg.ssmc;
    scfg.seed = derive_seed(cfg.seed, 0x55);
    Estimates lam = sstm_no_promise(g, terminals, s, scfg);

    std::mt19937_64 rng(derive_seed(cfg.seed, 0x99));
    int rounds = 1;  // i runs from 0 to floor(lg |U|)
    while ((std::size_t{1} << rounds) <= usz) ++rounds;

    StepResult best;
    std::vector<VertexId> r = terminals;
    for (int i = 0; i < rounds; ++i) {
        if (r.size() >= 2) {
            std::vector<std::vector<VertexId>> sets;
            sets.reserve(r.size());
            for (VertexId v : r) sets.push_back({v});
            std::vector<Cut> iso = isolating_cuts(g, sets);

            StepResult cur;
            cur.iteration = i;
            for (std::size_t j = 0; j < r.size(); ++j) {
                VertexId v = r[j];
                if (v == s) continue;
                std::vector<VertexId> du;
                for (VertexId x : iso[j].side)
                    if (in_u[x]) du.push_back(x);
                if (2 * du.size() > usz) continue;
                auto it = lam.find(v);
                if (it == lam.end() || iso[j].value != it->second) continue;
                cur.parts.push_back({v, iso[j]});
                cur.d.insert(cur.d.end(), du.begin(), du.end());
            }
            std::sort(cur.d.begin(), cur.d.end());
            if (cur.d.size() > best.d.size() || best.iteration < 0) best = std::move(cur);
        }
        std::vector<VertexId> next;
        for (VertexId v : r)
            if (v == s || (rng() & 1)) next.push_back(v);
        r = std::move(next);
    }
    return best;
}

namespace {

SubTree fast_rec(const Graph& h, const std::vector<VertexId>& terms_h,
                 const std::vector<VertexId>& terms_orig, std::uint64_t seed,
                 const GhConfig& cfg) {
    if (terms_h.size() == 1) return leaf(h, terms_orig[0]);
    Recurse rec = [&cfg](const Graph& hh, const std::vector<VertexId>& th,
                         const std::vector<VertexId>& to, std::uint64_t sd) {
        return fast_rec(hh, th, to, sd, cfg);
    };
    if (terms_h.size() == 2) {
        // A single max-flow is exact here and matches what the step would do.
        return classic_rec(h, terms_h, terms_orig, seed);
    }

    std::mt19937_64 rng(derive_seed(seed, 0x11));
    VertexId s = terms_h[rng() % terms_h.size()];
    GhConfig step_cfg = cfg;
    step_cfg.seed = derive_seed(seed, 0x22);
    StepResult step = ghtree_step(h, s, terms_h, step_cfg);

    if (step.parts.empty()) {
        // No qualifying part this round; make guaranteed progress with one
        // exact split, as the classic construction would.
        stats::count_step_fallback();
        VertexId t = terms_h[0] == s ? terms_h[1] : terms_h[0];
        FlowResult fr = max_flow(h, s, t);
        std::vector<char> in_s(h.num_vertices(), 0);
        for (VertexId v : fr.min_source_side.side) in_s[v] = 1;
        Cut t_side;
        for (VertexId v = 0; v < h.num_vertices(); ++v)
            if (!in_s[v]) t_side.side.push_back(v);
        t_side.value = fr.value;
        return split_and_combine(h, terms_h, terms_orig, {{t, t_side}}, rec,
                                 derive_seed(seed, 0x33));
    }
    return split_and_combine(h, terms_h, terms_orig, step.parts, rec,
                             derive_seed(seed, 0x44));
}

}  // namespace

GhTree ghtree_fast(const Graph& g, const std::vector<VertexId>& terminals,
                   const GhConfig& cfg) {
    if (terminals.empty()) throw std::invalid_argument("ghtree_fast: empty terminal set");
    if (terminals.size() == 1) {
        GhTree t;
        t.terminals = terminals;
        t.f.assign(g.num_vertices(), terminals[0]);
        return t;
    }
    std::vector<VertexId> sorted_u = terminals;
    std::sort(sorted_u.begin(), sorted_u.end());

    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        std::uint64_t seed = derive_seed(cfg.seed, 0xfa57 + attempt);
        GhConfig acfg = cfg;
        acfg.seed = seed;
        GhTree t = finish(g, sorted_u, fast_rec(g, sorted_u, sorted_u, seed, acfg));
        if (!cfg.validate) return t;
        TreeViolation v = validate_ghtree(g, t, cfg.validate_exact_max_terminals,
                                          cfg.validate_spot_checks, derive_seed(seed, 0xc4ec));
        if (v.ok) return t;
        stats::count_retry();
    }
    // Exact fallback: deterministic classic splits on the terminal set.
    return finish(g, sorted_u, classic_rec(g, sorted_u, sorted_u, 0));
}

TreeQueryResult tree_query(const GhTree& t, VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("tree_query: a == b");
    auto idx = [&](VertexId v) {
        auto it = std::lower_bound(t.terminals.begin(), t.terminals.end(), v);
        if (it == t.terminals.end() || *it != v)
            throw std::invalid_argument("tree_query: not a terminal");
        return static_cast<int>(it - t.terminals.begin());
    };
    const int k = static_cast<int>(t.terminals.size());
    int ia = idx(a), ib = idx(b);

    std::vector<std::vector<std::pair<int, int>>> adj(k);  // (neighbor, edge id)
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
        int u = idx(t.edges[e].a), v = idx(t.edges[e].b);
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<int> par(k, -1), par_edge(k, -1);
    std::vector<int> stack{ia};
    par[ia] = ia;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, e] : adj[v])
            if (par[u] < 0) {
                par[u] = v;
                par_edge[u] = e;
                stack.push_back(u);
            }
    }
    if (par[ib] < 0) throw std::logic_error("tree_query: disconnected tree");

    // Walk b -> a; strict improvement keeps the tie closest to b.
    int best_edge = -1;
    for (int v = ib; v != ia; v = par[v]) {
        int e = par_edge[v];
        if (best_edge < 0 || t.edges[e].w < t.edges[best_edge].w) best_edge = e;
    }

    // Component of a with best_edge removed, then f-preimage.
    std::vector<char> in_a(k, 0);
    stack.assign(1, ia);
    in_a[ia] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, e] : adj[v])
            if (e != best_edge && !in_a[u]) {
                in_a[u] = 1;
                stack.push_back(u);
            }
    }
    TreeQueryResult out;
    out.value = t.edges[best_edge].w;
    std::vector<char> term_in_a(k, 0);
    for (int i = 0; i < k; ++i) term_in_a[i] = in_a[i];
    for (VertexId v = 0; v < static_cast<int>(t.f.size()); ++v) {
        int fi = idx(t.f[v]);
        if (term_in_a[fi]) out.cut.side.push_back(v);
    }
    out.cut.value = out.value;
    return out;
}

}  // namespace ghcut
