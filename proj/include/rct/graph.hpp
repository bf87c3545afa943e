#pragma once

#include <string>
#include <vector>

#include "rct/types.hpp"

namespace rct {

struct Edge {
    Vertex u;
    Vertex v;
    Color color;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool has(Vertex w) const { return w == u || w == v; }
};

// Undirected multigraph-free graph with one color per edge. Vertices are
// 0..n-1, edges get ids 0..m-1 in insertion order. Self loops and parallel
// edges are rejected at insertion.
class ColoredGraph {
public:
    explicit ColoredGraph(int num_vertices);

    EdgeId add_edge(Vertex u, Vertex v, Color color);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids incident to v.
    const std::vector<EdgeId>& incident(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    // -1 when u,v are not adjacent.
    EdgeId find_edge(Vertex u, Vertex v) const;

    bool is_connected() const;

    // Degrees of freedom for classification helpers: every edge lies on at
    // most one cycle.
    bool is_cactus() const;

private:
    void check_vertex(Vertex v) const;

    int num_vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

// Symmetric reload cost table over colors 0..num_colors-1.
class ReloadCostTable {
public:
    ReloadCostTable() : num_colors_(0) {}
    explicit ReloadCostTable(int num_colors, Cost fill = 0);

    int num_colors() const { return num_colors_; }
    Cost get(Color a, Color b) const;
    // Sets both (a,b) and (b,a).
    void set(Color a, Color b, Cost value);

    Cost max_cost() const;

    // Checks c(e1,e3) <= c(e1,e2) + c(e2,e3) over all ordered triples of
    // distinct colors. The table alone decides this; callers that care about
    // the per-instance variant (triples of edges meeting at a vertex) should
    // use Instance::satisfies_triangle_inequality.
    bool satisfies_triangle_inequality() const;

private:
    void check_color(Color c) const;

    int num_colors_;
    std::vector<Cost> table_; // row-major num_colors x num_colors
};

struct Instance {
    ColoredGraph graph;
    ReloadCostTable costs;
    std::optional<Cost> budget; // decision threshold when present

    Instance(ColoredGraph g, ReloadCostTable c);

    // Reload cost between two edges that share a vertex.
    Cost reload(EdgeId a, EdgeId b) const;

    // Triangle inequality restricted to edge triples that pairwise share a
    // vertex, which is what the structural results need.
    bool satisfies_triangle_inequality() const;
};

// Sum of reload costs along a walk given as edge ids; endpoints free, a
// single edge costs 0. Throws InvalidArgument when consecutive edges do not
// share a vertex.
Cost path_reload_cost(const Instance& inst, const std::vector<EdgeId>& path);

} // namespace rct
