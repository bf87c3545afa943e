#include "rct/cactus.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "rct/block_tree.hpp"
#include "rct/forest.hpp"
#include "rct/instance_io.hpp"
#include "rct/oracle.hpp"

using namespace rct;

namespace {

Instance two_triangles_on_a_triangle() {
    // Central triangle 0-1-2 with a triangle hanging off 1 (3,4) and off 2 (5,6).
    ColoredGraph g(7);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 0);
    g.add_edge(2, 0, 0);
    g.add_edge(1, 3, 0);
    g.add_edge(3, 4, 0);
    g.add_edge(4, 1, 0);
    g.add_edge(2, 5, 0);
    g.add_edge(5, 6, 0);
    g.add_edge(6, 2, 0);
    ReloadCostTable costs(1);
    return Instance(std::move(g), std::move(costs));
}

void check_witness(const Instance& inst, const std::vector<EdgeId>& tree, Cost want) {
    int nv = inst.graph.num_vertices();
    REQUIRE(static_cast<int>(tree.size()) == std::max(0, nv - 1));
    SpanningForest sf(inst);
    for (EdgeId e : tree) sf.add_edge(e);
    CHECK(sf.spans());
    CHECK(sf.reload_diameter() == want);
}

// Grows a random cactus by attaching bridges and small cycles to vertices
// already present.
Instance random_cactus(std::mt19937& rng, int max_n, int num_colors, Cost max_cost) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> cyc_len(3, 5);
    int target = std::uniform_int_distribution<int>(2, max_n)(rng);

    struct Planned {
        Vertex u, v;
    };
    std::vector<Planned> planned;
    int n = 1;
    while (n < target) {
        Vertex at = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (coin(rng) == 0 || target - n < 2) {
            planned.push_back({at, n});
            n += 1;
        } else {
            int len = std::min(cyc_len(rng), target - n + 1);
            Vertex prev = at;
            for (int i = 0; i < len - 1; ++i) {
                planned.push_back({prev, n});
                prev = n;
                ++n;
            }
            planned.push_back({prev, at});
        }
    }

    ColoredGraph g(n);
    std::uniform_int_distribution<int> col(0, num_colors - 1);
    for (const Planned& pe : planned) g.add_edge(pe.u, pe.v, col(rng));

    ReloadCostTable costs(num_colors);
    std::uniform_int_distribution<Cost> cost(0, max_cost);
    for (int a = 0; a < num_colors; ++a)
        for (int b = a; b < num_colors; ++b) costs.set(a, b, cost(rng));
    return Instance(std::move(g), std::move(costs));
}

const CactusLambdaTrace* find_trace(const CactusStats& st, int block, EdgeId edge) {
    for (const auto& tr : st.trace)
        if (tr.block == block && tr.edge == edge) return &tr;
    return nullptr;
}

} // namespace

TEST_CASE("two hanging triangles at zero cost solve at diameter zero") {
    Instance inst = two_triangles_on_a_triangle();
    CactusStats st;
    auto d = cactus_decision(inst, 0, &st);
    REQUIRE(d.yes);
    check_witness(inst, d.tree, 0);
    CHECK(st.blocks == 3);

    BlockTree bt = build_block_tree(inst.graph);
    // Omitting the edge {2,0} of the central triangle: both hanging triangles
    // contribute two slice choices per omitted child edge, all defined.
    const auto* tr = find_trace(st, bt.root_block, 2);
    REQUIRE(tr != nullptr);
    CHECK(tr->defined);
    CHECK(tr->arcs == 12);
    CHECK(tr->phi0 == 8);
    CHECK(tr->phi1 == 8);
    CHECK(tr->phi2 == 0);
    CHECK(tr->i0 == 0);
    CHECK(tr->j0 == 0);
}

TEST_CASE("triangle with pairwise reload one") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    ReloadCostTable costs(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) costs.set(a, b, 1);
    Instance inst(std::move(g), std::move(costs));

    CHECK_FALSE(cactus_decision(inst, 0).yes);

    CactusStats st;
    auto d = cactus_decision(inst, 1, &st);
    REQUIRE(d.yes);
    check_witness(inst, d.tree, 1);
    const auto* tr = find_trace(st, 0, 0);
    REQUIRE(tr != nullptr);
    CHECK(tr->defined);
    CHECK(tr->i0 == 0);
    CHECK(tr->j0 == 1);

    auto best = cactus_minimize(inst);
    REQUIRE(best.best.has_value());
    CHECK(*best.best == 1);
    check_witness(inst, best.tree, 1);
}

TEST_CASE("six cycle splits into uneven sides") {
    ColoredGraph g(6);
    for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6, i);
    ReloadCostTable costs(6);
    costs.set(0, 1, 2);
    costs.set(5, 4, 2);
    costs.set(4, 3, 3);
    costs.set(0, 5, 1);
    Instance inst(std::move(g), std::move(costs));

    CactusStats st;
    auto d = cactus_decision(inst, 10, &st);
    REQUIRE(d.yes);
    const auto* tr = find_trace(st, 0, 2);
    REQUIRE(tr != nullptr);
    REQUIRE(tr->defined);
    CHECK(tr->i0 == 2);
    CHECK(tr->j0 == 5);

    // Interior reloads around the cycle sum to 8; dropping {4,5} cancels the
    // two biggest endpoint reloads, 3 and 2.
    auto best = cactus_minimize(inst);
    REQUIRE(best.best.has_value());
    CHECK(*best.best == 3);
    check_witness(inst, best.tree, 3);
}

TEST_CASE("a tree instance keeps its own diameter") {
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 2);
    ReloadCostTable costs(3);
    costs.set(0, 1, 4);
    costs.set(1, 2, 7);
    Instance inst(std::move(g), std::move(costs));

    auto best = cactus_minimize(inst);
    REQUIRE(best.best.has_value());
    CHECK(*best.best == 11);
    std::vector<EdgeId> sorted = best.tree;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("bowtie agrees with exhaustive search") {
    ColoredGraph g(5);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    g.add_edge(0, 3, 3);
    g.add_edge(3, 4, 4);
    g.add_edge(0, 4, 5);
    ReloadCostTable costs(6);
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) costs.set(a, b, Cost((a + b) % 5));
    Instance inst(std::move(g), std::move(costs));

    auto brute = brute_force_min_diameter(inst);
    REQUIRE(brute.best.has_value());
    auto got = cactus_minimize(inst);
    REQUIRE(got.best.has_value());
    CHECK(*got.best == *brute.best);
    check_witness(inst, got.tree, *got.best);
}

TEST_CASE("matches exhaustive search on random cacti") {
    std::mt19937 rng(20260816);
    for (int iter = 0; iter < 30; ++iter) {
        Instance inst = random_cactus(rng, 10, 4, 9);
        std::string text = serialize_instance(inst);
        CAPTURE(iter);
        CAPTURE(text);
        auto brute = brute_force_min_diameter(inst);
        REQUIRE(brute.best.has_value());
        auto got = cactus_minimize(inst);
        REQUIRE(got.best.has_value());
        CHECK(*got.best == *brute.best);
        check_witness(inst, got.tree, *got.best);

        // Decision threshold sits exactly at the optimum.
        CHECK(cactus_decision(inst, *brute.best).yes);
        if (*brute.best > 0) CHECK_FALSE(cactus_decision(inst, *brute.best - 1).yes);
    }
}

TEST_CASE("decision is monotone in the budget") {
    std::mt19937 rng(7);
    Instance inst = random_cactus(rng, 9, 3, 6);
    auto best = cactus_minimize(inst);
    REQUIRE(best.best.has_value());
    bool prev = false;
    for (Cost k = 0; k <= *best.best + 2; ++k) {
        bool yes = cactus_decision(inst, k).yes;
        if (prev) CHECK(yes);
        prev = yes;
        CHECK(yes == (k >= *best.best));
    }
}

TEST_CASE("same input yields the same tree") {
    std::mt19937 rng(99);
    Instance inst = random_cactus(rng, 10, 3, 8);
    auto a = cactus_minimize(inst);
    auto b = cactus_minimize(inst);
    REQUIRE(a.best.has_value());
    CHECK(a.best == b.best);
    CHECK(a.tree == b.tree);
}

TEST_CASE("rejects graphs outside its domain") {
    ColoredGraph k4(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b, 0);
    Instance dense(std::move(k4), ReloadCostTable(1));
    CHECK_THROWS_AS(cactus_decision(dense, 5), NotACactusError);

    ColoredGraph split(4);
    split.add_edge(0, 1, 0);
    split.add_edge(2, 3, 0);
    Instance apart(std::move(split), ReloadCostTable(1));
    CHECK_THROWS_AS(cactus_decision(apart, 5), PreconditionError);
    CHECK_FALSE(cactus_minimize(apart).best.has_value());
}

TEST_CASE("trivial graphs solve at zero") {
    Instance one(ColoredGraph(1), ReloadCostTable(1));
    auto r = cactus_minimize(one);
    REQUIRE(r.best.has_value());
    CHECK(*r.best == 0);
    CHECK(r.tree.empty());
    CHECK(cactus_decision(one, 0).yes);
}
