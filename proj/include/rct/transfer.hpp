#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rct/types.hpp"

namespace rct {

// Forest with labeled vertices and real-or-composite edges. A real edge
// carries the id of a graph edge; a composite edge stands for a dissolved
// path whose interior was compressed away. Anonymous vertices (vreal == -1)
// have lost their graph identity.
struct TfForest {
    struct Edge {
        int a = -1;
        int b = -1;
        EdgeId real = -1; // -1 marks a composite edge
        int other(int w) const { return w == a ? b : a; }
    };

    std::vector<int> vreal; // graph vertex id per forest vertex, or -1
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vreal.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    int add_vertex(int real_id);
    int add_edge(int a, int b, EdgeId real);

    // Forest vertex holding the given graph vertex, or -1.
    int find_vertex(int real_id) const;

    // Per vertex: (edge index, other endpoint).
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    bool is_forest() const;
    // Component id per vertex, ids dense from 0.
    std::vector<int> components() const;
};

// A vertex or an edge of a TfForest.
struct TfElement {
    bool is_edge = false;
    int idx = -1;

    bool operator==(const TfElement& o) const { return is_edge == o.is_edge && idx == o.idx; }
    static TfElement vertex(int i) { return {false, i}; }
    static TfElement edge(int i) { return {true, i}; }
};

struct TfReduceResult {
    TfForest forest;
    // Per original vertex/edge: the element of `forest` it collapsed onto.
    std::vector<TfElement> vertex_to;
    std::vector<TfElement> edge_to;
};

// Compresses f relative to the kept vertices: everything outside the closed
// neighborhood of `keep` is pruned (degree <= 1) or dissolved (degree 2,
// merging the two incident edges into a composite edge) until only branch
// structure remains. Throws PreconditionError when some component of f
// contains no kept vertex, and InvalidArgument when f has a cycle.
TfReduceResult reduce_forest(const TfForest& f, const std::vector<int>& keep);

// Value lookup into one side's table: (vertex index in the combined forest,
// target element of the combined forest, side). Must be defined whenever the
// vertex and element share a component on that side.
using TfAlphaFn = std::function<std::optional<Cost>(int, TfElement, int)>;
// Reload cost between two real graph edges meeting at a vertex.
using TfBetaFn = std::function<Cost(EdgeId, EdgeId)>;

// Transfer value from a start vertex to an element of a two-sided forest:
// walks the unique connecting path, charges alpha per maximal same-side
// segment and beta at each side switch. Side switches only happen at shared
// vertices, whose incident edges are real. Returns nullopt when start and
// target are in different components. Throws Error when a needed alpha value
// is missing, since same-side same-component values must exist.
std::optional<Cost> fuse_transfer(const TfForest& combined, const std::vector<int>& side,
                                  int from_vertex, TfElement to, const TfAlphaFn& alpha,
                                  const TfBetaFn& beta);

// Single-table alpha lookup: (terminal vertex index, element).
using TfTableFn = std::function<std::optional<Cost>(int, TfElement)>;

// Every pair of non-terminal elements must either avoid all terminals on the
// connecting path, or admit some terminal b on it with
// alpha(b,a) + beta(edges at b) + alpha(b,a') <= k.
bool is_admissible(const TfForest& f, const std::vector<int>& terminals, Cost k,
                   const TfTableFn& alpha, const TfBetaFn& beta);

} // namespace rct
