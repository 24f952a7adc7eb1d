#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <set>
#include <sstream>

#include "ghcut/gen.hpp"
#include "ghcut/ghtree.hpp"
#include "ghcut/io.hpp"
#include "ghcut/stats.hpp"
#include "ghcut/verify.hpp"
#include "test_util.hpp"

using namespace ghcut;

namespace {

std::set<std::tuple<VertexId, VertexId, Weight>> edge_set(const GhTree& t) {
    std::set<std::tuple<VertexId, VertexId, Weight>> s;
    for (const GhTreeEdge& e : t.edges)
        s.insert({std::min(e.a, e.b), std::max(e.a, e.b), e.w});
    return s;
}

std::vector<VertexId> all_vertices(int n) {
    std::vector<VertexId> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("classic tree fixtures") {
    Graph p3 = testutil::p3_weighted();
    GhTree t = gomory_hu_classic(p3);
    std::set<std::tuple<VertexId, VertexId, Weight>> want{{0, 1, 3}, {1, 2, 5}};
    CHECK(edge_set(t) == want);
    CHECK(t.f == std::vector<VertexId>{0, 1, 2});

    GhTree k = gomory_hu_classic(testutil::k4_unit());
    CHECK(k.edges.size() == 3);
    for (const GhTreeEdge& e : k.edges) CHECK(e.w == 3);
    CHECK(validate_ghtree(testutil::k4_unit(), k).ok);

    Graph one = Graph::build(1, {});
    GhTree t1 = gomory_hu_classic(one);
    CHECK(t1.edges.empty());
    CHECK(t1.terminals == std::vector<VertexId>{0});
}

TEST_CASE("classic uses exactly n-1 max-flows") {
    Graph g = random_connected_graph(12, 24, 9, 99);
    stats::reset();
    GhTree t = gomory_hu_classic(g);
    CHECK(stats::snapshot().maxflow_calls == 11);
    CHECK(validate_ghtree(g, t).ok);
}

TEST_CASE("gusfield produces a valid cut tree") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = random_connected_graph(n, 2 * n, 10, rng());
        stats::reset();
        GhTree t = gusfield(g);
        CHECK(stats::snapshot().maxflow_calls == n - 1);
        TreeViolation v = validate_ghtree(g, t);
        INFO(v.what);
        CHECK(v.ok);
    }
}

TEST_CASE("classic matches gusfield flow values on random graphs") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 10; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        Graph g = random_connected_graph(n, 2 * n, 7, rng());
        GhTree a = gomory_hu_classic(g), b = gusfield(g);
        for (VertexId x = 0; x < n; ++x)
            for (VertexId y = x + 1; y < n; ++y)
                CHECK(tree_query(a, x, y).value == tree_query(b, x, y).value);
    }
}

TEST_CASE("ghtree_step fixtures") {
    GhConfig cfg;
    cfg.ssmc.guide_trees = 8;

    // Star from the center: every leaf's minimal cut {leaf} qualifies.
    Graph star = testutil::star_unit(6);
    StepResult r = ghtree_step(star, 0, all_vertices(7), cfg);
    CHECK(r.d.size() >= 1);
    for (const auto& [v, cut] : r.parts) {
        CHECK(cut.value == 1);
        CHECK(cut.side == std::vector<VertexId>{v});
    }

    // Two terminals: D is {other} whenever sampling keeps it.
    Graph p3 = testutil::p3_weighted();
    StepResult r2 = ghtree_step(p3, 0, {0, 2}, cfg);
    if (!r2.parts.empty()) {
        CHECK(r2.d == std::vector<VertexId>{2});
        CHECK(r2.parts[0].second.value == 3);
    }

    // K4: every singleton cut has value lambda and half-size.
    StepResult r3 = ghtree_step(testutil::k4_unit(), 0, all_vertices(4), cfg);
    for (const auto& [v, cut] : r3.parts) {
        CHECK(cut.value == 3);
        CHECK(cut.side == std::vector<VertexId>{v});
    }
}

TEST_CASE("ghtree_fast fixtures") {
    GhConfig cfg;
    cfg.ssmc.guide_trees = 8;

    Graph p4 = testutil::path_unit(4);
    GhTree t = ghtree_fast(p4, all_vertices(4), cfg);
    std::set<std::tuple<VertexId, VertexId, Weight>> want{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
    CHECK(edge_set(t) == want);

    GhTree single = ghtree_fast(p4, {2}, cfg);
    CHECK(single.edges.empty());
    CHECK(single.terminals == std::vector<VertexId>{2});
    for (VertexId v = 0; v < 4; ++v) CHECK(single.f[v] == 2);
}

TEST_CASE("ghtree_fast is valid on random graphs and terminal subsets") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 25; ++it) {
        int n = 5 + static_cast<int>(rng() % 12);
        Graph g = random_connected_graph(n, 2 * n + 3, 12, rng());
        std::vector<VertexId> terms;
        for (VertexId v = 0; v < n; ++v)
            if (rng() % 3) terms.push_back(v);
        if (terms.size() < 2) terms = all_vertices(n);
        GhConfig cfg;
        cfg.seed = rng();
        cfg.ssmc.guide_trees = 8;
        cfg.ssmc.base_case_size = 4;
        GhTree t = ghtree_fast(g, terms, cfg);
        CHECK(t.terminals.size() == terms.size());
        CHECK(t.edges.size() + 1 == terms.size());
        TreeViolation v = validate_ghtree(g, t);
        INFO(v.what);
        REQUIRE(v.ok);
        // Steiner correctness: tree values equal true pairwise mincuts.
        if (n <= 10)
            for (std::size_t i = 0; i < terms.size(); ++i)
                for (std::size_t j = i + 1; j < terms.size(); ++j)
                    CHECK(tree_query(t, terms[i], terms[j]).value ==
                          testutil::brute_lambda(g, terms[i], terms[j]));
    }
}

TEST_CASE("tree_query fixtures") {
    Graph p3 = testutil::p3_weighted();
    GhTree t = gomory_hu_classic(p3);
    TreeQueryResult q = tree_query(t, 0, 2);
    CHECK(q.value == 3);
    CHECK(q.cut.side == std::vector<VertexId>{0});
    CHECK(q.cut.value == 3);
    TreeQueryResult qr = tree_query(t, 2, 0);
    CHECK(qr.value == 3);
    CHECK(qr.cut.side == std::vector<VertexId>{1, 2});

    CHECK_THROWS_AS(tree_query(t, 1, 1), std::invalid_argument);

    // Weight-zero tree edge from a disconnected graph.
    Graph disc = Graph::build(3, {{0, 1, 4}});
    GhTree td = gomory_hu_classic(disc);
    CHECK(tree_query(td, 0, 2).value == 0);
    CHECK(tree_query(td, 0, 1).value == 4);
}

TEST_CASE("tree text and json round trips") {
    Graph g = random_connected_graph(9, 16, 8, 5);
    GhTree t = ghtree_fast(g, {0, 2, 3, 5, 8}, GhConfig{});

    std::ostringstream out;
    write_tree(out, t);
    std::istringstream in(out.str());
    GhTree r = read_tree(in);
    CHECK(r.terminals == t.terminals);
    CHECK(r.f == t.f);
    CHECK(edge_set(r) == edge_set(t));
    std::ostringstream again;
    write_tree(again, r);
    CHECK(again.str() == out.str());

    GhTree j = tree_from_json(tree_to_json(t));
    CHECK(j.terminals == t.terminals);
    CHECK(j.f == t.f);
    CHECK(edge_set(j) == edge_set(t));
}
