#include "doctest.h"

#include "rct/instance_io.hpp"
#include "rct/oracle.hpp"

using namespace rct;

namespace {

Instance triangle_all_ones() {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    ReloadCostTable c(3);
    for (Color a = 0; a < 3; ++a)
        for (Color b = a + 1; b < 3; ++b) c.set(a, b, 1);
    return Instance(std::move(g), std::move(c));
}

} // namespace

TEST_CASE("triangle with unit reloads has optimum 1") {
    auto r = brute_force_min_diameter(triangle_all_ones());
    REQUIRE(r.best.has_value());
    CHECK(*r.best == 1);
    CHECK(r.tree.size() == 2);
    CHECK(r.trees_examined == 3);
}

TEST_CASE("enumeration visits each spanning tree exactly once") {
    // Complete graph on 4 vertices has 16 spanning trees.
    ColoredGraph g(4);
    int color = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, color++);
    Instance inst(std::move(g), ReloadCostTable(6));
    auto r = brute_force_min_diameter(inst);
    CHECK(r.trees_examined == 16);
    CHECK(*r.best == 0); // all reloads are zero
}

TEST_CASE("a tree is its only spanning tree") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 0);
    ReloadCostTable c(2);
    c.set(0, 1, 3);
    Instance inst(std::move(g), std::move(c));
    auto r = brute_force_min_diameter(inst);
    CHECK(r.trees_examined == 1);
    CHECK(*r.best == 6); // 0..3 reloads twice
    CHECK(r.tree == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("cycle optimum drops the worst junction") {
    // Square with one expensive corner: omit an edge at that corner.
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 2);
    g.add_edge(3, 0, 3);
    ReloadCostTable c(4);
    c.set(0, 1, 10); // corner at vertex 1 is bad
    c.set(1, 2, 1);
    c.set(2, 3, 1);
    c.set(0, 3, 1);
    Instance inst(std::move(g), std::move(c));
    auto r = brute_force_min_diameter(inst);
    // Dropping edge 0 or 1 kills the junction at vertex 1; the remaining
    // path pays the two other junctions.
    CHECK(*r.best == 2);
    CHECK(r.trees_examined == 4);
}

TEST_CASE("disconnected graph yields no tree") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 0);
    Instance inst(std::move(g), ReloadCostTable(1));
    auto r = brute_force_min_diameter(inst);
    CHECK_FALSE(r.best.has_value());
    CHECK(r.tree.empty());
}

TEST_CASE("trivial graphs") {
    Instance one(ColoredGraph(1), ReloadCostTable(0));
    CHECK(*brute_force_min_diameter(one).best == 0);
    Instance zero(ColoredGraph(0), ReloadCostTable(0));
    CHECK(*brute_force_min_diameter(zero).best == 0);
}

TEST_CASE("operation budget is enforced") {
    ColoredGraph g(6);
    int color = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) g.add_edge(u, v, color++);
    Instance inst(std::move(g), ReloadCostTable(15));
    BruteOptions opts;
    opts.max_operations = 10;
    CHECK_THROWS_AS(brute_force_min_diameter(inst, opts), ResourceLimitError);
}
