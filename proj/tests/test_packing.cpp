#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "ghcut/gen.hpp"
#include "ghcut/oracles.hpp"
#include "ghcut/packing.hpp"
#include "ghcut/verify.hpp"
#include "test_util.hpp"

using namespace ghcut;

namespace {

double subgraph_length(const Graph& g, const std::vector<double>& len,
                       const SteinerSubgraph& h) {
    double total = 0;
    for (int id : h.edge_ids) total += len[id];
    return total;
}

void check_feasible(const Graph& g, const Packing& p) {
    std::vector<double> load(g.num_edges(), 0.0);
    for (std::size_t i = 0; i < p.subgraphs.size(); ++i)
        for (int id : p.subgraphs[i].edge_ids) load[id] += p.values[i];
    for (int id = 0; id < g.num_edges(); ++id)
        CHECK(load[id] <= static_cast<double>(g.edge(id).w) * (1.0 + 1e-9));
}

}  // namespace

TEST_CASE("mehlhorn fixtures") {
    Graph p3 = testutil::path_unit(3);
    std::vector<double> ones3(p3.num_edges(), 1.0);
    SteinerSubgraph h = mehlhorn_steiner(p3, ones3, {0, 2});
    CHECK(h.edge_ids.size() == 2);  // the whole path, length 2

    Graph star = testutil::star_unit(3);
    std::vector<double> ones_s(star.num_edges(), 1.0);
    SteinerSubgraph hs = mehlhorn_steiner(star, ones_s, {1, 2, 3});
    CHECK(hs.edge_ids.size() == 3);  // the whole star

    Graph c4 = testutil::cycle_unit(4);
    std::vector<double> ones_c(c4.num_edges(), 1.0);
    SteinerSubgraph hc = mehlhorn_steiner(c4, ones_c, {0, 1, 2, 3});
    CHECK(subgraph_length(c4, ones_c, hc) == 3.0);  // any 3-edge path

    Graph disc = Graph::build(3, {{0, 1, 1}});
    std::vector<double> od(disc.num_edges(), 1.0);
    CHECK_THROWS_AS(mehlhorn_steiner(disc, od, {0, 2}), std::invalid_argument);
}

TEST_CASE("mehlhorn stays within twice the optimum") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_connected_graph(n, 2 * n, 4, rng());
        std::vector<double> len(g.num_edges());
        for (double& l : len) l = 1.0 + static_cast<double>(rng() % 8);
        std::vector<VertexId> u;
        for (VertexId v = 0; v < n && u.size() < 5; ++v)
            if (rng() % 2) u.push_back(v);
        if (u.size() < 2) continue;
        auto [opt, opt_edges] = brute_min_steiner_tree(g, len, u);
        SteinerSubgraph h = mehlhorn_steiner(g, len, u);
        CHECK(subgraph_length(g, len, h) <= 2.0 * opt + 1e-9);
    }
}

TEST_CASE("mwu_pack fixtures") {
    Graph k4 = testutil::k4_unit();
    Packing p = mwu_pack(k4, {0, 1, 2, 3}, 0.1);
    check_feasible(k4, p);
    CHECK(p.total_value >= 3.0 / 4.1);

    Graph edge = Graph::build(2, {{0, 1, 10}});
    Packing pe = mwu_pack(edge, {0, 1}, 0.1);
    check_feasible(edge, pe);
    CHECK(pe.total_value >= 10.0 / 4.1);

    Graph p3 = testutil::path_unit(3);
    Packing pp = mwu_pack(p3, {0, 2}, 0.1);
    check_feasible(p3, pp);
    for (const SteinerSubgraph& h : pp.subgraphs) CHECK(h.edge_ids.size() == 2);

    CHECK_THROWS_AS(mwu_pack(k4, {0, 1}, 0.01), std::invalid_argument);
}

TEST_CASE("mwu augmentation counters obey the deterministic bound") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 10; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        // Simple unit-weight graph: random spanning tree plus distinct extras.
        std::vector<RawEdge> raw;
        std::set<std::pair<int, int>> used;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 1; i < n; ++i) {
            int a = perm[rng() % i], b = perm[i];
            raw.push_back({a, b, 1});
            used.insert({std::min(a, b), std::max(a, b)});
        }
        for (int tries = 0; tries < 3 * n; ++tries) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b || used.count({std::min(a, b), std::max(a, b)})) continue;
            raw.push_back({a, b, 1});
            used.insert({std::min(a, b), std::max(a, b)});
        }
        Graph g = Graph::build(n, raw);
        std::vector<VertexId> u;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 2) u.push_back(v);
        if (u.size() < 2) continue;
        double eps = 0.1;
        Packing p = mwu_pack(g, u, eps);
        double delta = std::pow(2.0 * g.num_edges(), -1.0 / eps);
        long long bound = static_cast<long long>(
            std::ceil(std::log((1.0 + eps) / delta) / std::log(1.0 + eps)));
        std::vector<long long> uses(g.num_edges(), 0);
        long long total = 0;
        for (const SteinerSubgraph& h : p.subgraphs)
            for (int id : h.edge_ids) {
                ++uses[id];
                ++total;
            }
        for (long long c : uses) CHECK(c <= bound);
        CHECK(total <= static_cast<long long>(g.num_edges()) * bound);
    }
}

TEST_CASE("packing value close to the Steiner mincut") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 15; ++it) {
        int n = 5 + static_cast<int>(rng() % 10);
        Graph g = random_connected_graph(n, 3 * n, 7, rng());
        std::vector<VertexId> u;
        for (VertexId v = 0; v < n && u.size() < 6; ++v)
            if (rng() % 2) u.push_back(v);
        if (u.size() < 2) continue;
        Packing p = mwu_pack(g, u, 0.1);
        check_feasible(g, p);
        CHECK(p.total_value >= static_cast<double>(steiner_mincut(g, u)) / 4.5);
    }
}

TEST_CASE("guide tree sampling fixtures") {
    Graph p3 = testutil::path_unit(3);
    std::vector<GuideTree> ts = sample_guide_trees(p3, {0, 2}, 0, 5, 1);
    for (const GuideTree& t : ts) {
        CHECK(t.num_nodes() == 3);  // always the whole path
        CHECK(t.node_vertex[t.source] == 0);
        CHECK(t.real_vertices() == std::vector<VertexId>{0, 1, 2});
    }

    Graph k4 = testutil::k4_unit();
    std::vector<GuideTree> tk = sample_guide_trees(k4, {0, 1, 2, 3}, 1,
                                                   default_guide_tree_trials(4), 7);
    CHECK(static_cast<int>(tk.size()) == default_guide_tree_trials(4));
    for (const GuideTree& t : tk) {
        CHECK(t.num_nodes() == 4);
        int edges = 0;
        for (const auto& a : t.adj) edges += static_cast<int>(a.size());
        CHECK(edges / 2 == 3);  // spanning tree on the 4 terminals
    }

    Graph edge = Graph::build(2, {{0, 1, 4}});
    std::vector<GuideTree> te = sample_guide_trees(edge, {0, 1}, 1, 3, 9);
    for (const GuideTree& t : te) CHECK(t.num_nodes() == 2);
}
