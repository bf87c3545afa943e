#include <random>

#include "doctest.h"
#include "rct/forest.hpp"
#include "rct/graph.hpp"
#include "rct/transfer.hpp"
#include "rct/types.hpp"

using namespace rct;

namespace {

TfForest path_forest(int n) {
    TfForest f;
    for (int i = 0; i < n; ++i) f.add_vertex(i);
    for (int i = 0; i + 1 < n; ++i) f.add_edge(i, i + 1, i);
    return f;
}

} // namespace

TEST_CASE("reduction keeps a fully protected path") {
    TfForest f = path_forest(4);
    auto r = reduce_forest(f, {0, 3});
    CHECK(r.forest.num_vertices() == 4);
    CHECK(r.forest.num_edges() == 3);
    for (int v = 0; v < 4; ++v) {
        CHECK(!r.vertex_to[v].is_edge);
    }
    for (int e = 0; e < 3; ++e) {
        CHECK(r.edge_to[e].is_edge);
        CHECK(r.forest.edges[r.edge_to[e].idx].real == e);
    }
}

TEST_CASE("interior vertex dissolves into a composite edge") {
    TfForest f = path_forest(5); // 0-1-2-3-4, keep ends
    auto r = reduce_forest(f, {0, 4});
    CHECK(r.forest.num_vertices() == 4);
    REQUIRE(r.forest.num_edges() == 3);
    // vertex 2 folds onto the composite spanning 1..3
    REQUIRE(r.vertex_to[2].is_edge);
    const auto& comp = r.forest.edges[r.vertex_to[2].idx];
    CHECK(comp.real == -1);
    CHECK(r.forest.vreal[comp.a] + r.forest.vreal[comp.b] == 4); // endpoints 1 and 3
    CHECK(r.edge_to[1] == r.vertex_to[2]);
    CHECK(r.edge_to[2] == r.vertex_to[2]);
    CHECK(r.edge_to[0].is_edge);
    CHECK(r.forest.edges[r.edge_to[0].idx].real == 0);
}

TEST_CASE("unkept leaves fall off and fold onto the anchor") {
    TfForest f; // star: 0 center, leaves 1,2,3; keep leaf 1
    for (int i = 0; i < 4; ++i) f.add_vertex(i);
    f.add_edge(0, 1, 0);
    f.add_edge(0, 2, 1);
    f.add_edge(0, 3, 2);
    auto r = reduce_forest(f, {1});
    CHECK(r.forest.num_vertices() == 2);
    CHECK(r.forest.num_edges() == 1);
    CHECK(r.vertex_to[2] == TfElement::vertex(r.vertex_to[0].idx));
    CHECK(r.vertex_to[3] == r.vertex_to[2]);
    CHECK(r.edge_to[1] == r.vertex_to[2]); // dead pendant edge folds with its leaf
    CHECK(r.edge_to[2] == r.vertex_to[2]);
}

TEST_CASE("a hanging tail collapses through repeated rules") {
    TfForest f = path_forest(4); // 0-1-2-3, keep only 0
    auto r = reduce_forest(f, {0});
    CHECK(r.forest.num_vertices() == 2); // 0 and its protected neighbor 1
    CHECK(r.forest.num_edges() == 1);
    CHECK(r.forest.edges[0].real == 0);
    CHECK(r.vertex_to[2] == TfElement::vertex(r.vertex_to[1].idx));
    CHECK(r.vertex_to[3] == r.vertex_to[2]);
    CHECK(r.edge_to[1] == r.vertex_to[2]);
    CHECK(r.edge_to[2] == r.vertex_to[2]);
}

TEST_CASE("long interior becomes one composite with both maps agreeing") {
    TfForest f = path_forest(6); // keep ends, 2 and 3 dissolve
    auto r = reduce_forest(f, {0, 5});
    REQUIRE(r.forest.num_edges() == 3);
    CHECK(r.vertex_to[2].is_edge);
    CHECK(r.vertex_to[2] == r.vertex_to[3]);
    CHECK(r.edge_to[1] == r.vertex_to[2]);
    CHECK(r.edge_to[2] == r.vertex_to[2]);
    CHECK(r.edge_to[3] == r.vertex_to[2]);
}

TEST_CASE("reduction is idempotent") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng() % 10);
        TfForest f;
        for (int i = 0; i < n; ++i) f.add_vertex(i);
        for (int i = 1; i < n; ++i) f.add_edge(static_cast<int>(rng() % i), i, i - 1);
        int nkeep = 1 + static_cast<int>(rng() % 3);
        std::vector<int> keep;
        for (int j = 0; j < nkeep; ++j) keep.push_back(static_cast<int>(rng() % n));
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

        auto r1 = reduce_forest(f, keep);
        std::vector<int> keep2;
        for (int v : keep) keep2.push_back(r1.vertex_to[v].idx);
        std::sort(keep2.begin(), keep2.end());
        keep2.erase(std::unique(keep2.begin(), keep2.end()), keep2.end());
        auto r2 = reduce_forest(r1.forest, keep2);
        CHECK(r2.forest.num_vertices() == r1.forest.num_vertices());
        CHECK(r2.forest.num_edges() == r1.forest.num_edges());
        for (int v = 0; v < r1.forest.num_vertices(); ++v)
            CHECK(r2.vertex_to[v] == TfElement::vertex(v));
    }
}

TEST_CASE("reduction rejects bad inputs") {
    TfForest two;
    two.add_vertex(0);
    two.add_vertex(1);
    CHECK_THROWS_AS(reduce_forest(two, {0}), PreconditionError); // vertex 1 stranded

    TfForest cyc;
    for (int i = 0; i < 3; ++i) cyc.add_vertex(i);
    cyc.add_edge(0, 1, 0);
    cyc.add_edge(1, 2, 1);
    cyc.add_edge(2, 0, 2);
    CHECK_THROWS_AS(reduce_forest(cyc, {0, 1, 2}), InvalidArgument);

    TfForest p = path_forest(3);
    CHECK_THROWS_AS(reduce_forest(p, {7}), InvalidArgument);
}

TEST_CASE("fusion with no side switch is a single table lookup") {
    TfForest f = path_forest(3);
    std::vector<int> side = {0, 0};
    auto alpha = [](int from, TfElement to, int) -> std::optional<Cost> {
        if (!to.is_edge && to.idx == from) return Cost{0};
        return Cost{7};
    };
    auto beta = [](EdgeId, EdgeId) -> Cost { return 100; };
    auto got = fuse_transfer(f, side, 0, TfElement::vertex(2), alpha, beta);
    REQUIRE(got);
    CHECK(*got == 7);
}

TEST_CASE("fusion charges beta at each side switch") {
    TfForest f = path_forest(3); // edges 0:{0,1} side 0, 1:{1,2} side 1
    std::vector<int> side = {0, 1};
    auto alpha = [](int from, TfElement to, int s) -> std::optional<Cost> {
        if (!to.is_edge && to.idx == from) return Cost{0};
        return Cost{s == 0 ? 3u : 5u};
    };
    auto beta = [](EdgeId a, EdgeId b) -> Cost { return a == 0 && b == 1 ? 11 : 99; };
    auto got = fuse_transfer(f, side, 0, TfElement::vertex(2), alpha, beta);
    REQUIRE(got);
    CHECK(*got == 3 + 11 + 5);
}

TEST_CASE("fusion reaches edge targets through their near endpoint") {
    TfForest f = path_forest(4); // target edge {2,3}
    std::vector<int> side = {0, 0, 1};
    auto alpha = [](int from, TfElement to, int s) -> std::optional<Cost> {
        if (!to.is_edge && to.idx == from) return Cost{0};
        if (to.is_edge) return Cost{2};
        return Cost{s == 0 ? 4u : 1000u};
    };
    auto beta = [](EdgeId, EdgeId) -> Cost { return 1; };
    auto got = fuse_transfer(f, side, 0, TfElement::edge(2), alpha, beta);
    REQUIRE(got);
    CHECK(*got == 4 + 1 + 2); // segment to the switch, reload, edge lookup

    CHECK_THROWS_AS(fuse_transfer(f, side, 2, TfElement::edge(2), alpha, beta), InvalidArgument);
}

TEST_CASE("fusion returns nothing across components") {
    TfForest f;
    for (int i = 0; i < 4; ++i) f.add_vertex(i);
    f.add_edge(0, 1, 0);
    f.add_edge(2, 3, 1);
    std::vector<int> side = {0, 1};
    auto alpha = [](int, TfElement, int) -> std::optional<Cost> { return Cost{0}; };
    auto beta = [](EdgeId, EdgeId) -> Cost { return 0; };
    CHECK(!fuse_transfer(f, side, 0, TfElement::vertex(3), alpha, beta));
}

TEST_CASE("fusion matches direct path costs on a real instance") {
    // Deterministic small version of the acceptance cross-check: split a
    // spanning tree into two edge classes meeting at terminals, feed exact
    // side distances, and the fused values must equal whole-tree distances.
    std::mt19937_64 rng(2026);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 4 + static_cast<int>(rng() % 6);
        int q = 2 + static_cast<int>(rng() % 4);
        ColoredGraph g(n);
        std::vector<std::pair<int, int>> tree_edges;
        for (int v = 1; v < n; ++v) {
            int u = static_cast<int>(rng() % v);
            g.add_edge(u, v, static_cast<Color>(rng() % q));
            tree_edges.push_back({u, v});
        }
        ReloadCostTable costs(q);
        for (int a = 0; a < q; ++a)
            for (int b = a; b < q; ++b) costs.set(a, b, rng() % 10);
        Instance inst(std::move(g), std::move(costs));

        std::vector<int> side(n - 1);
        for (int e = 0; e + 1 < n; ++e) side[e] = static_cast<int>(rng() % 2);

        TfForest comb;
        for (int v = 0; v < n; ++v) comb.add_vertex(v);
        for (int e = 0; e + 1 < n; ++e)
            comb.add_edge(tree_edges[e].first, tree_edges[e].second, e);

        // Exact per-side distance tables.
        SpanningForest s0(inst), s1(inst), whole(inst);
        for (int e = 0; e + 1 < n; ++e) {
            (side[e] == 0 ? s0 : s1).add_edge(e);
            whole.add_edge(e);
        }
        auto alpha = [&](int from, TfElement to, int s) -> std::optional<Cost> {
            const SpanningForest& sf = s == 0 ? s0 : s1;
            if (!to.is_edge) return sf.reload_distance(from, to.idx);
            auto da = sf.reload_distance(from, comb.edges[to.idx].a);
            auto db = sf.reload_distance(from, comb.edges[to.idx].b);
            if (!da || !db) return std::nullopt;
            return std::max(*da, *db);
        };
        auto beta = [&](EdgeId a, EdgeId b) -> Cost { return inst.reload(a, b); };

        for (int from = 0; from < n; ++from) {
            for (int to = 0; to < n; ++to) {
                auto got = fuse_transfer(comb, side, from, TfElement::vertex(to), alpha, beta);
                auto want = whole.reload_distance(from, to);
                REQUIRE(got.has_value() == want.has_value());
                if (got) CHECK(*got == *want);
            }
        }
    }
}

TEST_CASE("admissibility passes when every transfer fits the budget") {
    TfForest f = path_forest(5); // terminals at 2 only
    auto alpha = [](int, TfElement) -> std::optional<Cost> { return Cost{1}; };
    auto beta = [](EdgeId, EdgeId) -> Cost { return 1; };
    CHECK(is_admissible(f, {2}, 3, alpha, beta));
    CHECK(!is_admissible(f, {2}, 2, alpha, beta)); // 1 + 1 + 1 over budget
}

TEST_CASE("admissibility ignores terminal-free and cross-component pairs") {
    TfForest f;
    for (int i = 0; i < 5; ++i) f.add_vertex(i);
    f.add_edge(0, 1, 0);
    f.add_edge(1, 2, 1); // component {0,1,2}, terminal 1
    f.add_edge(3, 4, 2); // terminal-free component is unreachable from it
    auto alpha = [](int, TfElement) -> std::optional<Cost> { return Cost{50}; };
    auto beta = [](EdgeId, EdgeId) -> Cost { return 50; };
    // 0 and 2 route through terminal 1 and fail; 3,4 pairs have no terminal.
    CHECK(!is_admissible(f, {1}, 100, alpha, beta));
    CHECK(is_admissible(f, {1}, 150, alpha, beta));
    TfForest g;
    for (int i = 0; i < 4; ++i) g.add_vertex(i);
    g.add_edge(0, 1, 0);
    g.add_edge(2, 3, 1);
    CHECK(is_admissible(g, {0, 2}, 0, alpha, beta)); // only cross-component pairs
}
