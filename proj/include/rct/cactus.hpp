#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rct/graph.hpp"

namespace rct {

// One partial-solution computation: block plus omitted edge for cycle blocks,
// block plus its bridge edge for edge blocks. i0/j0 are the least achievable
// anchor eccentricities on the two sides of the omitted edge (j0 stays 0 for
// edge blocks, whose single eccentricity target is i0).
struct CactusLambdaTrace {
    int block = -1;
    EdgeId edge = -1;
    bool defined = false;
    int arcs = 0;
    int phi0 = 0;
    int phi1 = 0;
    int phi2 = 0;
    Cost i0 = 0;
    Cost j0 = 0;
};

struct CactusStats {
    int blocks = 0;
    std::uint64_t sat_probes = 0; // satisfiability checks across all searches
    std::vector<CactusLambdaTrace> trace;
};

struct CactusDecision {
    bool yes = false;
    std::vector<EdgeId> tree; // spanning tree achieving diameter <= k when yes
};

// Decides whether a connected cactus has a spanning tree of reload diameter
// at most k. Throws NotACactusError / PreconditionError (disconnected).
CactusDecision cactus_decision(const Instance& inst, Cost k, CactusStats* stats = nullptr);

struct CactusResult {
    std::optional<Cost> best; // nullopt iff the graph is disconnected
    std::vector<EdgeId> tree;
};

// Minimum reload diameter over spanning trees, by doubling then binary search
// on the decision procedure.
CactusResult cactus_minimize(const Instance& inst, CactusStats* stats = nullptr);

} // namespace rct
