#pragma once

#include <vector>

#include "rct/graph.hpp"

namespace rct {

// One biconnected block of a cactus: either a single bridge edge or a simple
// cycle. For cycles, verts lists the cycle starting at the anchor and edges[i]
// joins verts[i] with verts[(i+1) % p]. For bridges, verts = {anchor, other}
// and edges holds the one edge.
struct Block {
    bool is_cycle = false;
    std::vector<Vertex> verts;
    std::vector<EdgeId> edges;
    Vertex anchor = -1;
    int parent = -1;
    std::vector<int> children;
};

struct BlockTree {
    Vertex root = -1; // smallest vertex that is not a cut vertex
    int root_block = -1;
    std::vector<Block> blocks;
    std::vector<char> is_cut;
    std::vector<int> post_order; // block indices, children before parents
};

// Decomposes a connected cactus. Throws PreconditionError when the graph is
// empty or disconnected, NotACactusError when some block is neither a single
// edge nor a simple cycle. A single-vertex graph yields a tree with no blocks.
BlockTree build_block_tree(const ColoredGraph& g);

} // namespace rct
