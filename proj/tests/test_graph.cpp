#include <doctest.h>

#include <random>
#include <sstream>

#include "ghcut/gen.hpp"
#include "ghcut/graph.hpp"
#include "ghcut/io.hpp"
#include "test_util.hpp"

using namespace ghcut;

TEST_CASE("build merges parallel edges and drops self-loops") {
    Graph g = Graph::build(2, {{0, 1, 3}, {1, 0, 4}});
    CHECK(g.num_edges() == 1);
    CHECK(g.edge(0).w == 7);

    Graph h = Graph::build(2, {{0, 0, 5}, {0, 1, 2}});
    CHECK(h.num_edges() == 1);
    CHECK(h.dropped_self_loops() == 1);

    CHECK_THROWS_AS(Graph::build(2, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(2, {{0, 1, kMaxWeight + 1}}), std::invalid_argument);
}

TEST_CASE("cut_value on fixtures") {
    Graph p3 = testutil::p3_weighted();
    CHECK(p3.cut_value({0}) == 3);
    CHECK(p3.cut_value({1}) == 8);
    Graph k4 = testutil::k4_unit();
    CHECK(k4.cut_value({0, 1}) == 4);
    CHECK(k4.cut_value({1}) == 3);
    CHECK_THROWS_AS(p3.cut_value({}), std::invalid_argument);
    CHECK_THROWS_AS(p3.cut_value({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("contract fixtures") {
    Graph p3 = testutil::p3_weighted();
    auto [c1, m1] = contract(p3, {{0, 1}});
    CHECK(c1.num_vertices() == 2);
    CHECK(c1.num_edges() == 1);
    CHECK(c1.edge(0).w == 5);
    CHECK(m1.expand({m1.image[0]}) == std::vector<VertexId>{0, 1});

    Graph k4 = testutil::k4_unit();
    auto [c2, m2] = contract(k4, {{0, 1}, {2, 3}});
    CHECK(c2.num_vertices() == 2);
    CHECK(c2.num_edges() == 1);
    CHECK(c2.edge(0).w == 4);

    auto [c3, m3] = contract(k4, {});
    CHECK(c3.num_vertices() == 4);
    CHECK(c3.num_edges() == 6);
    for (VertexId v = 0; v < 4; ++v) CHECK(m3.image[v] == v);

    CHECK_THROWS_AS(contract(k4, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("contraction preserves cut values") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(8, 14, 9, rng());
        // Random partition into up to 3 blocks plus singletons.
        std::vector<std::vector<VertexId>> blocks(3);
        for (VertexId v = 0; v < 8; ++v) {
            std::uint64_t r = rng() % 5;
            if (r < 3) blocks[r].push_back(v);
        }
        std::vector<std::vector<VertexId>> use;
        for (auto& b : blocks)
            if (b.size() >= 2) use.push_back(b);
        auto [h, map] = contract(g, use);
        if (h.num_vertices() < 2) continue;
        for (unsigned mask = 1; mask + 1 < (1u << h.num_vertices()); ++mask) {
            std::vector<VertexId> side = testutil::mask_to_side(mask, h.num_vertices());
            CHECK(h.cut_value(side) == g.cut_value(map.expand(side)));
        }
    }
}

TEST_CASE("cut symmetry and deterministic build") {
    std::mt19937_64 rng(11);
    Graph g = random_graph(7, 12, 5, 42);
    for (int it = 0; it < 30; ++it) {
        unsigned mask = 1 + rng() % ((1u << 7) - 2);
        std::vector<VertexId> side = testutil::mask_to_side(mask, 7);
        std::vector<VertexId> other = testutil::mask_to_side(~mask & 0x7f, 7);
        CHECK(g.cut_value(side) == g.cut_value(other));
    }

    Graph a = Graph::build(4, {{0, 1, 2}, {2, 3, 4}, {1, 0, 1}});
    Graph b = Graph::build(4, {{2, 3, 4}, {0, 1, 3}});
    REQUIRE(a.num_edges() == b.num_edges());
    for (int i = 0; i < a.num_edges(); ++i) {
        CHECK(a.edge(i).u == b.edge(i).u);
        CHECK(a.edge(i).v == b.edge(i).v);
        CHECK(a.edge(i).w == b.edge(i).w);
    }
}

TEST_CASE("graph text formats") {
    std::istringstream dimacs("c comment\np ghct 3 2\ne 1 2 3\ne 2 3 5\n");
    Graph g = read_graph(dimacs);
    CHECK(g.num_vertices() == 3);
    CHECK(g.cut_value({0}) == 3);

    std::istringstream plain("0 1 3\n1 2 5\n");
    Graph h = read_graph(plain);
    CHECK(h.num_vertices() == 3);
    CHECK(h.cut_value({2}) == 5);

    std::ostringstream out;
    write_graph(out, g);
    std::istringstream back(out.str());
    Graph r = read_graph(back);
    CHECK(r.num_edges() == g.num_edges());
    CHECK(r.cut_value({1}) == g.cut_value({1}));

    std::istringstream bad("p ghct 3 1\ne 1 4 2\n");
    CHECK_THROWS_AS(read_graph(bad), ParseError);
    std::istringstream bad2("p ghct 3 1\ne 1 2\n");
    try {
        read_graph(bad2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}
