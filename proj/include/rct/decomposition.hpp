#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rct/graph.hpp"

namespace rct {

// Tree decomposition: a tree over bags of vertices. Bags are kept sorted.
struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> tree_edges; // over bag indices

    int width() const;
};

// Checks the three decomposition axioms (every vertex in some bag, every edge
// inside some bag, per-vertex bag set connected) plus basic structural sanity.
// Returns std::nullopt when valid, otherwise a message naming the violation.
std::optional<std::string> validate_decomposition(const ColoredGraph& g,
                                                  const TreeDecomposition& td);

// Min-fill elimination ordering with lowest-id tie break. Valid for any graph,
// connected or not; no width optimality promise.
TreeDecomposition heuristic_decomposition(const ColoredGraph& g);

// PACE-style text format: header "s td <bags> <width+1> <n>", bag lines
// "b <id> <v...>", then one "<a> <b>" line per decomposition tree edge.
// Bag ids and vertices are 1-based in the text.
TreeDecomposition parse_tree_decomposition(const std::string& text);
std::string serialize_tree_decomposition(const TreeDecomposition& td);
TreeDecomposition read_tree_decomposition_file(const std::string& path);
void write_tree_decomposition_file(const TreeDecomposition& td, const std::string& path);

} // namespace rct
