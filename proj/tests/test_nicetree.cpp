#include <random>

#include "doctest.h"
#include "rct/decomposition.hpp"
#include "rct/graph.hpp"
#include "rct/nice_tree.hpp"
#include "rct/types.hpp"

using namespace rct;

namespace {

int count_kind(const NiceTree& nt, NiceNode::Kind k) {
    int c = 0;
    for (const auto& nd : nt.nodes)
        if (nd.kind == k) ++c;
    return c;
}

} // namespace

TEST_CASE("single vertex graph refines to leaf, introduce, forget") {
    ColoredGraph g(1);
    TreeDecomposition td;
    td.bags = {{0}};
    NiceTree nt = build_nice_tree(g, td);
    CHECK(!validate_nice_tree(g, nt));
    REQUIRE(nt.nodes.size() == 3);
    CHECK(nt.nodes[0].kind == NiceNode::Kind::Leaf);
    CHECK(nt.nodes[1].kind == NiceNode::Kind::IntroduceVertex);
    CHECK(nt.nodes[2].kind == NiceNode::Kind::Forget);
    CHECK(nt.nodes[nt.root].bag.empty());
}

TEST_CASE("single edge places exactly one edge node") {
    ColoredGraph g(2);
    g.add_edge(0, 1, 0);
    TreeDecomposition td;
    td.bags = {{0, 1}};
    NiceTree nt = build_nice_tree(g, td);
    CHECK(!validate_nice_tree(g, nt));
    CHECK(count_kind(nt, NiceNode::Kind::IntroduceEdge) == 1);
    CHECK(count_kind(nt, NiceNode::Kind::Join) == 0);
    CHECK(nt.width() == 1);
}

TEST_CASE("every graph edge is placed exactly once over a real decomposition") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        ColoredGraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(rng() % v), v, 0);
        for (int extra = static_cast<int>(rng() % 4); extra > 0; --extra) {
            Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
            if (a != b && g.find_edge(a, b) == -1) g.add_edge(a, b, 0);
        }
        TreeDecomposition td = heuristic_decomposition(g);
        REQUIRE(!validate_decomposition(g, td));
        NiceTree nt = build_nice_tree(g, td);
        auto bad = validate_nice_tree(g, nt);
        if (bad) CAPTURE(*bad);
        CHECK(!bad);
        CHECK(count_kind(nt, NiceNode::Kind::IntroduceEdge) == g.num_edges());
        CHECK(nt.width() <= td.width());
    }
}

TEST_CASE("join nodes appear when the decomposition branches") {
    // Star of three paths from a center; a path decomposition avoids joins,
    // the natural branching one needs them.
    ColoredGraph g(7);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 0);
    g.add_edge(0, 3, 0);
    g.add_edge(3, 4, 0);
    g.add_edge(0, 5, 0);
    g.add_edge(5, 6, 0);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
    td.tree_edges = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}};
    NiceTree nt = build_nice_tree(g, td);
    CHECK(!validate_nice_tree(g, nt));
    CHECK(count_kind(nt, NiceNode::Kind::Join) >= 2);
    CHECK(count_kind(nt, NiceNode::Kind::IntroduceEdge) == 6);
}

TEST_CASE("invalid decomposition is rejected with the axiom message") {
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 0);
    TreeDecomposition td;
    td.bags = {{0, 1}};
    td.tree_edges = {};
    CHECK_THROWS_AS(build_nice_tree(g, td), InvalidArgument);
    try {
        build_nice_tree(g, td);
    } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
    }
}

TEST_CASE("validator catches corrupted shapes") {
    ColoredGraph g(2);
    g.add_edge(0, 1, 0);
    TreeDecomposition td;
    td.bags = {{0, 1}};
    NiceTree nt = build_nice_tree(g, td);

    NiceTree broken = nt;
    for (auto& nd : broken.nodes)
        if (nd.kind == NiceNode::Kind::IntroduceEdge) nd.edge = -1;
    CHECK(validate_nice_tree(g, broken));

    broken = nt;
    broken.nodes[broken.root].bag = {0};
    CHECK(validate_nice_tree(g, broken));
}
