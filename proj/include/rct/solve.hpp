#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rct/decomposition.hpp"
#include "rct/graph.hpp"

namespace rct {

enum class Algo { Auto, Brute, Cactus, TreewidthDp };

const char* to_string(Algo a);
std::optional<Algo> algo_from_string(std::string_view name); // auto|brute|cactus|twdp

// Structural class of a connected graph, in dispatch order. A tree is its
// own unique spanning tree; a cycle has one spanning tree per removable
// edge; a cactus gets the block solver; everything else the decomposition
// dynamic program.
enum class GraphClass { Tree, Cycle, Cactus, General };

const char* to_string(GraphClass c);
GraphClass classify_connected(const ColoredGraph& g);

struct SolveOptions {
    Algo algo = Algo::Auto;
    // Decide "some spanning tree has diameter <= decision" instead of
    // minimizing.
    std::optional<Cost> decision;
    // Decomposition for the DP solver; a heuristic one is built when absent.
    const TreeDecomposition* decomposition = nullptr;
    // Enumeration bounds for the brute-force solver.
    std::uint64_t max_operations = 10'000'000;
    std::uint64_t max_trees = 0; // 0: unbounded
};

struct SolveResult {
    bool yes = false;            // decision verdict; always true when minimizing
    std::optional<Cost> opt;     // minimum diameter, minimize mode only
    std::vector<EdgeId> tree;    // witness spanning tree; empty on a No
    Algo algorithm = Algo::Auto; // what actually ran, never Auto
    GraphClass detected = GraphClass::General;
    // Statistics from whichever solver ran.
    int width = -1;                   // decomposition width used by the DP
    std::uint64_t trees_examined = 0; // brute force
    std::uint64_t sat_probes = 0;     // cactus block solver
    std::size_t max_table = 0;        // DP peak table size
};

// Unified entry point: dispatches on opts.algo, with Auto selecting per the
// detected class. Every witness is re-verified before returning. Throws
// PreconditionError on disconnected input, NotACactusError when the cactus
// solver is forced onto a non-cactus, InvalidArgument for a decomposition
// that does not fit the graph, and ResourceLimitError on exhausted budgets.
SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

} // namespace rct
