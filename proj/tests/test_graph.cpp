#include "doctest.h"

#include "rct/forest.hpp"
#include "rct/graph.hpp"

using namespace rct;

namespace {

Instance triangle_distinct_colors(Cost off_diag = 1) {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    ReloadCostTable c(3);
    for (Color a = 0; a < 3; ++a)
        for (Color b = a + 1; b < 3; ++b) c.set(a, b, off_diag);
    return Instance(std::move(g), std::move(c));
}

} // namespace

TEST_CASE("graph construction rejects bad input") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    CHECK_THROWS_AS(g.add_edge(0, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(1, 0, 2), InvalidArgument); // parallel, reversed
    CHECK_THROWS_AS(g.add_edge(0, 3, 0), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 2, -1), InvalidArgument);
    CHECK_THROWS_AS(ColoredGraph(-1), InvalidArgument);
}

TEST_CASE("incidence and lookup") {
    ColoredGraph g(4);
    EdgeId a = g.add_edge(0, 1, 0);
    EdgeId b = g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 0);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.find_edge(1, 0) == a);
    CHECK(g.find_edge(2, 1) == b);
    CHECK(g.find_edge(0, 3) == -1);
    CHECK(g.edge(a).other(0) == 1);
    CHECK(g.edge(a).has(1));
    CHECK_FALSE(g.edge(a).has(2));
}

TEST_CASE("connectivity") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 0);
    CHECK_FALSE(g.is_connected());
    g.add_edge(1, 2, 0);
    CHECK(g.is_connected());
    CHECK(ColoredGraph(1).is_connected());
    CHECK(ColoredGraph(0).is_connected());
}

TEST_CASE("cactus recognition") {
    // Trees and cycles qualify.
    ColoredGraph path(4);
    path.add_edge(0, 1, 0);
    path.add_edge(1, 2, 0);
    path.add_edge(2, 3, 0);
    CHECK(path.is_cactus());

    ColoredGraph cyc(4);
    for (int i = 0; i < 4; ++i) cyc.add_edge(i, (i + 1) % 4, 0);
    CHECK(cyc.is_cactus());

    // Two triangles sharing one vertex qualify.
    ColoredGraph bowtie(5);
    bowtie.add_edge(0, 1, 0);
    bowtie.add_edge(1, 2, 0);
    bowtie.add_edge(2, 0, 0);
    bowtie.add_edge(0, 3, 0);
    bowtie.add_edge(3, 4, 0);
    bowtie.add_edge(4, 0, 0);
    CHECK(bowtie.is_cactus());

    // Theta graph: two cycles share the edge {0,2}.
    ColoredGraph theta(4);
    theta.add_edge(0, 1, 0);
    theta.add_edge(1, 2, 0);
    theta.add_edge(0, 3, 0);
    theta.add_edge(3, 2, 0);
    theta.add_edge(0, 2, 0);
    CHECK_FALSE(theta.is_cactus());

    ColoredGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v, 0);
    CHECK_FALSE(k4.is_cactus());

    // Disconnected union of cacti is still a cactus.
    ColoredGraph two(6);
    two.add_edge(0, 1, 0);
    two.add_edge(1, 2, 0);
    two.add_edge(2, 0, 0);
    two.add_edge(3, 4, 0);
    CHECK(two.is_cactus());
}

TEST_CASE("reload cost table is symmetric by construction") {
    ReloadCostTable t(3);
    t.set(0, 2, 5);
    CHECK(t.get(2, 0) == 5);
    CHECK(t.get(0, 0) == 0);
    CHECK(t.max_cost() == 5);
    CHECK_THROWS_AS(t.get(0, 3), InvalidArgument);
}

TEST_CASE("triangle inequality on the table") {
    ReloadCostTable t(3);
    t.set(0, 1, 1);
    t.set(1, 2, 1);
    t.set(0, 2, 2);
    CHECK(t.satisfies_triangle_inequality());
    t.set(0, 2, 3);
    CHECK_FALSE(t.satisfies_triangle_inequality());
}

TEST_CASE("per-instance triangle inequality only looks at edges meeting in a vertex") {
    // Colors 0 and 2 never meet at a vertex, so their oversized entry is
    // invisible to the instance-level check.
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 2);
    ReloadCostTable c(3);
    c.set(0, 1, 1);
    c.set(1, 2, 1);
    c.set(0, 2, 100);
    CHECK_FALSE(c.satisfies_triangle_inequality());
    Instance inst(std::move(g), std::move(c));
    CHECK(inst.satisfies_triangle_inequality());
}

TEST_CASE("instance validates colors against the table") {
    ColoredGraph g(2);
    g.add_edge(0, 1, 5);
    CHECK_THROWS_AS(Instance(std::move(g), ReloadCostTable(3)), InvalidArgument);
}

TEST_CASE("walk cost sums reloads at interior vertices") {
    Instance inst = triangle_distinct_colors();
    CHECK(path_reload_cost(inst, {}) == 0);
    CHECK(path_reload_cost(inst, {0}) == 0);
    CHECK(path_reload_cost(inst, {0, 1}) == 1);
    CHECK(path_reload_cost(inst, {0, 1, 2}) == 2);
}

TEST_CASE("walk cost rejects teleports") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 0);
    Instance inst(std::move(g), ReloadCostTable(1));
    CHECK_THROWS_AS(path_reload_cost(inst, {0, 1}), InvalidArgument);
}

TEST_CASE("reload between edges requires a shared vertex") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 1);
    Instance inst(std::move(g), ReloadCostTable(2));
    CHECK_THROWS_AS(inst.reload(0, 1), InvalidArgument);
}

TEST_CASE("forest tracks components and rejects cycles") {
    Instance inst = triangle_distinct_colors();
    SpanningForest f(inst);
    CHECK_FALSE(f.spans());
    f.add_edge(0);
    f.add_edge(1);
    CHECK(f.spans());
    CHECK_THROWS_AS(f.add_edge(2), InvalidArgument);
    CHECK(f.same_component(0, 2));
    CHECK(f.has_edge(0));
    CHECK_FALSE(f.has_edge(2));
}

TEST_CASE("forest distances on a path") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    ReloadCostTable c(2);
    c.set(0, 1, 7);
    Instance inst(std::move(g), std::move(c));
    SpanningForest f(inst);
    f.add_edge(0);
    f.add_edge(1);
    CHECK(f.reload_distance(0, 2) == Cost{7});
    CHECK(f.reload_distance(0, 1) == Cost{0}); // single-edge path
    CHECK(f.reload_distance(1, 1) == Cost{0});
    CHECK(f.eccentricity(1) == 0);
    CHECK(f.eccentricity(0) == 7);
    CHECK(f.reload_diameter() == 7);
    auto p = f.path_edges(0, 2);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<EdgeId>{0, 1});
}

TEST_CASE("forest distance across components is absent") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 0);
    Instance inst(std::move(g), ReloadCostTable(1));
    SpanningForest f(inst);
    f.add_edge(0);
    f.add_edge(1);
    CHECK_FALSE(f.reload_distance(0, 3).has_value());
    CHECK_FALSE(f.path_edges(0, 3).has_value());
    CHECK_FALSE(f.spans());
    CHECK(f.reload_diameter() == 0); // both components are single edges
}
