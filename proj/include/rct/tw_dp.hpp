#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rct/decomposition.hpp"
#include "rct/graph.hpp"

namespace rct {

struct DpOptions {
    // Re-checks structural invariants on every stored table entry and throws
    // Error on a breach. Cheap at bag scale; on by default.
    bool validate_tables = true;
    // Hard bound on entries per table; 0 derives one from the instance
    // parameters. Exceeding it throws ResourceLimitError.
    std::uint64_t table_cap = 0;
};

struct DpStats {
    int nodes = 0;
    int width = 0;
    std::size_t max_table = 0;
    std::uint64_t inserted = 0;
    std::uint64_t deduped = 0;
    std::uint64_t rejected_budget = 0;        // some transfer value exceeded k
    std::uint64_t rejected_admissibility = 0; // no terminal certifies a crossing
    std::uint64_t fusions = 0;
    std::uint64_t cap = 0;
    bool cap_tripped = false;
};

struct DpDecision {
    bool yes = false;
    std::vector<EdgeId> tree; // spanning witness when yes
};

// Decides whether a spanning tree with reload diameter <= k exists, by a
// table dynamic program over the decomposition. Throws PreconditionError on
// disconnected input and InvalidArgument when td is not a decomposition of
// the graph.
DpDecision twdp_decision(const Instance& inst, const TreeDecomposition& td, Cost k,
                         const DpOptions& opt = {}, DpStats* stats = nullptr);

struct DpResult {
    Cost best = 0;
    std::vector<EdgeId> tree;
};

// Minimum reload diameter via decision probes: geometric ramp-up, then
// binary search. nullopt only for disconnected graphs is never returned;
// disconnection throws as in twdp_decision.
DpResult twdp_minimize(const Instance& inst, const TreeDecomposition& td,
                       const DpOptions& opt = {}, DpStats* stats = nullptr);

} // namespace rct
