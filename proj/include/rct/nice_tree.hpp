#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rct/decomposition.hpp"
#include "rct/graph.hpp"

namespace rct {

// Refinement of a tree decomposition into unit-step nodes: the bag changes by
// at most one vertex per step, every graph edge is placed at exactly one
// dedicated node, and the root bag is empty so the root covers the whole
// graph.
struct NiceNode {
    enum class Kind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

    Kind kind = Kind::Leaf;
    std::vector<Vertex> bag; // sorted
    int child = -1;
    int child2 = -1;   // joins only
    Vertex vertex = -1; // introduce/forget subject
    EdgeId edge = -1;   // introduced edge
};

struct NiceTree {
    std::vector<NiceNode> nodes; // children precede parents
    int root = -1;

    int width() const;
};

// Throws InvalidArgument naming the violated axiom when td is not a valid
// decomposition of g.
NiceTree build_nice_tree(const ColoredGraph& g, const TreeDecomposition& td);

// Structural self-check: kind-specific bag rules, one introduction per graph
// edge, empty root bag, and vertex lifetime contiguity. Returns std::nullopt
// when consistent.
std::optional<std::string> validate_nice_tree(const ColoredGraph& g, const NiceTree& nt);

} // namespace rct
