#pragma once

#include <optional>
#include <vector>

#include "rct/graph.hpp"
#include "rct/types.hpp"

namespace rct {

// A cycle-free subset of an instance's edges, over all of its vertices.
// Insertion keeps acyclicity via union-find; adding a cycle-closing edge
// throws. Distances are reload costs along the unique tree paths.
class SpanningForest {
public:
    explicit SpanningForest(const Instance& inst);

    void add_edge(EdgeId e);
    bool has_edge(EdgeId e) const;
    const std::vector<EdgeId>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool same_component(Vertex u, Vertex v) const;
    bool spans() const; // single component covering every vertex

    // Unique path u..v as edge ids, empty path for u==v; nullopt when the
    // endpoints lie in different components.
    std::optional<std::vector<EdgeId>> path_edges(Vertex u, Vertex v) const;

    std::optional<Cost> reload_distance(Vertex u, Vertex v) const;

    // Distances from src to every vertex; nullopt outside src's component.
    std::vector<std::optional<Cost>> distances_from(Vertex src) const;

    // Max reload distance from v within its component.
    Cost eccentricity(Vertex v) const;

    // Max reload distance over all pairs in a common component.
    Cost reload_diameter() const;

    const Instance& instance() const { return *inst_; }

private:
    struct Reach {
        std::vector<char> seen;
        std::vector<Cost> cost;
        std::vector<EdgeId> in_edge;   // edge used to enter the vertex
        std::vector<Vertex> parent;
    };
    Reach explore(Vertex src) const;
    int find(int v) const;

    const Instance* inst_;
    std::vector<EdgeId> edges_;
    std::vector<std::vector<EdgeId>> adj_;
    mutable std::vector<int> dsu_;
};

} // namespace rct
