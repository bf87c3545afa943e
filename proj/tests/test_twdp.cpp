#include "rct/tw_dp.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "rct/cactus.hpp"
#include "rct/decomposition.hpp"
#include "rct/forest.hpp"
#include "rct/oracle.hpp"

using namespace rct;

namespace {

void check_witness(const Instance& inst, const std::vector<EdgeId>& tree, Cost bound) {
    int nv = inst.graph.num_vertices();
    REQUIRE(static_cast<int>(tree.size()) == std::max(0, nv - 1));
    SpanningForest sf(inst);
    for (EdgeId e : tree) sf.add_edge(e);
    CHECK(sf.spans());
    CHECK(sf.reload_diameter() <= bound);
}

ReloadCostTable random_costs(std::mt19937& rng, int num_colors, Cost max_cost) {
    ReloadCostTable costs(num_colors);
    std::uniform_int_distribution<Cost> cost(0, max_cost);
    for (int a = 0; a < num_colors; ++a)
        for (int b = a; b < num_colors; ++b) costs.set(a, b, cost(rng));
    return costs;
}

// Connected graph with bounded degree: a random spanning tree plus a few
// extra edges wherever degree room remains.
Instance random_bounded_graph(std::mt19937& rng, int max_n, int max_deg, int num_colors,
                              Cost max_cost) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    ColoredGraph g(n);
    std::uniform_int_distribution<int> col(0, num_colors - 1);
    std::vector<int> deg(n, 0);
    for (int v = 1; v < n; ++v) {
        for (int tries = 0; tries < 64; ++tries) {
            Vertex at = std::uniform_int_distribution<int>(0, v - 1)(rng);
            if (deg[at] >= max_deg) continue;
            g.add_edge(at, v, col(rng));
            ++deg[at];
            ++deg[v];
            break;
        }
        if (deg[v] == 0) {
            // every earlier vertex saturated; force an attachment anyway
            Vertex at = 0;
            g.add_edge(at, v, col(rng));
            ++deg[at];
            ++deg[v];
        }
    }
    int extras = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int t = 0; t < extras; ++t) {
        Vertex u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        Vertex v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u == v || deg[u] >= max_deg || deg[v] >= max_deg) continue;
        if (g.find_edge(u, v) >= 0) continue;
        g.add_edge(u, v, col(rng));
        ++deg[u];
        ++deg[v];
    }
    return Instance(std::move(g), random_costs(rng, num_colors, max_cost));
}

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
    return Instance(std::move(g), random_costs(rng, num_colors, max_cost));
}

DpResult solve_min(const Instance& inst, DpStats* stats = nullptr) {
    TreeDecomposition td = heuristic_decomposition(inst.graph);
    return twdp_minimize(inst, td, {}, stats);
}

} // namespace

TEST_CASE("path instance solves at its own diameter") {
    // colors alternate, every switch costs 2: diameter of the path is 2*(n-2)
    ColoredGraph g(5);
    for (Vertex v = 0; v + 1 < 5; ++v) g.add_edge(v, v + 1, v % 2);
    ReloadCostTable costs(2);
    costs.set(0, 1, 2);
    Instance inst(std::move(g), std::move(costs));
    TreeDecomposition td = heuristic_decomposition(inst.graph);

    auto opt = twdp_minimize(inst, td);
    CHECK(opt.best == 6);
    check_witness(inst, opt.tree, 6);
    CHECK_FALSE(twdp_decision(inst, td, 5).yes);
    CHECK(twdp_decision(inst, td, 6).yes);
}

TEST_CASE("triangle with pairwise reload one needs exactly one") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    ReloadCostTable costs(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) costs.set(a, b, 1);
    Instance inst(std::move(g), std::move(costs));
    TreeDecomposition td = heuristic_decomposition(inst.graph);

    auto d0 = twdp_decision(inst, td, 0);
    CHECK_FALSE(d0.yes);
    CHECK(d0.tree.empty());
    auto d1 = twdp_decision(inst, td, 1);
    REQUIRE(d1.yes);
    check_witness(inst, d1.tree, 1);
    auto opt = twdp_minimize(inst, td);
    CHECK(opt.best == 1);
}

TEST_CASE("zero cost table solves any connected graph at zero") {
    std::mt19937 rng(41);
    Instance inst = random_bounded_graph(rng, 7, 4, 3, 0);
    DpStats st;
    TreeDecomposition td = heuristic_decomposition(inst.graph);
    auto d = twdp_decision(inst, td, 0, {}, &st);
    REQUIRE(d.yes);
    check_witness(inst, d.tree, 0);
    CHECK(st.nodes > 0);
    CHECK(st.width >= 1);
    CHECK_FALSE(st.cap_tripped);
}

TEST_CASE("single vertex and disconnected inputs") {
    ColoredGraph one(1);
    Instance i1(std::move(one), ReloadCostTable(1));
    TreeDecomposition td1 = heuristic_decomposition(i1.graph);
    auto d = twdp_decision(i1, td1, 0);
    CHECK(d.yes);
    CHECK(d.tree.empty());

    ColoredGraph two(2); // no edges
    Instance i2(std::move(two), ReloadCostTable(1));
    TreeDecomposition td2 = heuristic_decomposition(i2.graph);
    CHECK_THROWS_AS(twdp_decision(i2, td2, 0), PreconditionError);
}

TEST_CASE("invalid decomposition is rejected") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 0);
    Instance inst(std::move(g), ReloadCostTable(1));
    TreeDecomposition td;
    td.bags = {{0, 1}}; // vertex 2 never appears
    CHECK_THROWS_AS(twdp_decision(inst, td, 0), InvalidArgument);
}

TEST_CASE("random small graphs match exhaustive search") {
    std::mt19937 rng(1234);
    for (int it = 0; it < 30; ++it) {
        Instance inst = random_bounded_graph(rng, 8, 4, 3, 6);
        auto brute = brute_force_min_diameter(inst);
        REQUIRE(brute.best.has_value());

        DpStats st;
        auto opt = solve_min(inst, &st);
        INFO("iteration ", it, " n=", inst.graph.num_vertices(), " m=", inst.graph.num_edges());
        CHECK(opt.best == *brute.best);
        check_witness(inst, opt.tree, opt.best);
        CHECK_FALSE(st.cap_tripped);
    }
}

TEST_CASE("random cacti agree with the cactus solver") {
    std::mt19937 rng(777);
    for (int it = 0; it < 15; ++it) {
        Instance inst = random_cactus(rng, 12, 3, 8);
        auto c = cactus_minimize(inst);
        REQUIRE(c.best.has_value());
        auto opt = solve_min(inst);
        INFO("iteration ", it, " n=", inst.graph.num_vertices());
        CHECK(opt.best == *c.best);
        check_witness(inst, opt.tree, opt.best);
    }
}

TEST_CASE("decisions are monotone in the budget") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 10; ++it) {
        Instance inst = random_bounded_graph(rng, 7, 4, 3, 5);
        auto brute = brute_force_min_diameter(inst);
        REQUIRE(brute.best.has_value());
        Cost opt = *brute.best;
        TreeDecomposition td = heuristic_decomposition(inst.graph);
        Cost from = opt > 2 ? opt - 2 : 0;
        for (Cost k = from; k <= opt + 2; ++k) {
            auto d = twdp_decision(inst, td, k);
            INFO("iteration ", it, " k=", k, " opt=", opt);
            CHECK(d.yes == (k >= opt));
            if (d.yes) check_witness(inst, d.tree, k);
        }
    }
}

TEST_CASE("provided and derived decompositions agree") {
    // 4-cycle with a chord; a valid handwritten decomposition
    ColoredGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 0);
    g.add_edge(3, 0, 1);
    g.add_edge(0, 2, 2);
    ReloadCostTable costs(3);
    costs.set(0, 1, 3);
    costs.set(0, 2, 1);
    costs.set(1, 2, 2);
    Instance inst(std::move(g), std::move(costs));

    TreeDecomposition hand;
    hand.bags = {{0, 1, 2}, {0, 2, 3}};
    hand.tree_edges = {{0, 1}};
    REQUIRE_FALSE(validate_decomposition(inst.graph, hand).has_value());

    auto via_hand = twdp_minimize(inst, hand);
    auto via_heur = solve_min(inst);
    CHECK(via_hand.best == via_heur.best);
    check_witness(inst, via_hand.tree, via_hand.best);

    auto brute = brute_force_min_diameter(inst);
    CHECK(via_hand.best == *brute.best);
}

TEST_CASE("table cap trips as a resource error") {
    std::mt19937 rng(9);
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 2, 2);
    Instance inst(std::move(g), random_costs(rng, 3, 4));
    TreeDecomposition td = heuristic_decomposition(inst.graph);
    DpOptions opt;
    opt.table_cap = 1;
    DpStats st;
    CHECK_THROWS_AS(twdp_decision(inst, td, 10, opt, &st), ResourceLimitError);
    CHECK(st.cap_tripped);
}

TEST_CASE("stats describe the run") {
    std::mt19937 rng(31);
    Instance inst = random_bounded_graph(rng, 6, 3, 2, 3);
    TreeDecomposition td = heuristic_decomposition(inst.graph);
    DpStats st;
    twdp_decision(inst, td, 100, {}, &st);
    CHECK(st.nodes > 0);
    CHECK(st.inserted > 0);
    CHECK(st.max_table > 0);
    CHECK(st.cap == 1'000'000);
    CHECK(st.width == td.width());
}
