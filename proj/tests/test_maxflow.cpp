#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ghcut/gen.hpp"
#include "ghcut/maxflow.hpp"
#include "ghcut/stats.hpp"
#include "test_util.hpp"

using namespace ghcut;

TEST_CASE("max_flow fixtures") {
    Graph p3 = testutil::p3_weighted();
    FlowResult r = max_flow(p3, 0, 2);
    CHECK(r.value == 3);
    CHECK(r.min_source_side.side == std::vector<VertexId>{0});

    Graph k4 = testutil::k4_unit();
    CHECK(max_flow(k4, 0, 3).value == 3);

    Graph disc = Graph::build(2, {});
    FlowResult d = max_flow(disc, 0, 1);
    CHECK(d.value == 0);
    CHECK(d.min_source_side.side == std::vector<VertexId>{0});

    CHECK_THROWS_AS(max_flow(p3, 1, 1), std::invalid_argument);
}

TEST_CASE("flow value matches subset enumeration and is symmetric") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(7, 11, 8, rng());
        for (VertexId s = 0; s < 7; ++s)
            for (VertexId t = s + 1; t < 7; ++t) {
                Weight brute = testutil::brute_lambda(g, s, t);
                CHECK(max_flow_value(g, s, t) == brute);
                CHECK(max_flow_value(g, t, s) == brute);
            }
    }
}

TEST_CASE("mincut sides are certified and nested") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        Graph g = random_connected_graph(8, 14, 6, rng());
        VertexId s = rng() % 8, t = rng() % 8;
        if (s == t) continue;
        FlowResult r = max_flow(g, s, t);
        CHECK(g.cut_value(r.min_source_side.side) == r.value);
        CHECK(g.cut_value(r.max_source_side.side) == r.value);
        std::vector<char> in_max(8, 0);
        for (VertexId v : r.max_source_side.side) in_max[v] = 1;
        for (VertexId v : r.min_source_side.side) CHECK(in_max[v]);
    }
}

TEST_CASE("min_source_side is the vertex-minimal optimal side") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_graph(7, 12, 5, rng());
        VertexId s = rng() % 7, t = rng() % 7;
        if (s == t) continue;
        FlowResult r = max_flow(g, s, t);
        auto [bval, bmask] = testutil::brute_min_cut(g, 1u << s, 1u << t);
        CHECK(r.value == bval);
        CHECK(testutil::to_mask(r.min_source_side.side) == bmask);
    }
}

TEST_CASE("flow calls are counted") {
    stats::reset();
    Graph p3 = testutil::p3_weighted();
    max_flow(p3, 0, 2);
    max_flow_value(p3, 0, 1);
    stats::Snapshot s = stats::snapshot();
    CHECK(s.maxflow_calls == 2);
    CHECK(s.flow_vertices == 6);
}
