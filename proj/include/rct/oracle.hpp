#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rct/forest.hpp"
#include "rct/graph.hpp"

namespace rct {

struct BruteOptions {
    // Upper bound on enumeration steps before giving up with
    // ResourceLimitError. One step is one node of the include/exclude tree.
    std::uint64_t max_operations = 10'000'000;
    // Upper bound on complete spanning trees evaluated; 0 means unbounded.
    std::uint64_t max_trees = 0;
};

struct BruteResult {
    std::optional<Cost> best;   // nullopt iff the graph is disconnected
    std::vector<EdgeId> tree;   // edges of one optimal spanning tree
    std::uint64_t trees_examined = 0;
};

// Exhaustive minimum over all spanning trees of the reload diameter.
// Enumerates by include/exclude branching on edges in id order, pruning
// branches that already closed a cycle or can no longer span.
BruteResult brute_force_min_diameter(const Instance& inst, const BruteOptions& opts = {});

} // namespace rct
