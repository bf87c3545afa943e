#include "rct/forest.hpp"

#include <algorithm>

namespace rct {

SpanningForest::SpanningForest(const Instance& inst) : inst_(&inst) {
    int n = inst.graph.num_vertices();
    adj_.resize(n);
    dsu_.resize(n);
    for (int i = 0; i < n; ++i) dsu_[i] = i;
}

int SpanningForest::find(int v) const {
    while (dsu_[v] != v) {
        dsu_[v] = dsu_[dsu_[v]];
        v = dsu_[v];
    }
    return v;
}

void SpanningForest::add_edge(EdgeId e) {
    const Edge& ed = inst_->graph.edge(e);
    int ru = find(ed.u), rv = find(ed.v);
    if (ru == rv) throw InvalidArgument("edge would close a cycle in the forest");
    dsu_[ru] = rv;
    edges_.push_back(e);
    adj_[ed.u].push_back(e);
    adj_[ed.v].push_back(e);
}

bool SpanningForest::has_edge(EdgeId e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

bool SpanningForest::same_component(Vertex u, Vertex v) const {
    return find(u) == find(v);
}

bool SpanningForest::spans() const {
    int n = inst_->graph.num_vertices();
    if (n == 0) return true;
    int r = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != r) return false;
    return true;
}

SpanningForest::Reach SpanningForest::explore(Vertex src) const {
    int n = inst_->graph.num_vertices();
    Reach r;
    r.seen.assign(n, 0);
    r.cost.assign(n, 0);
    r.in_edge.assign(n, -1);
    r.parent.assign(n, -1);
    std::vector<Vertex> stack{src};
    r.seen[src] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : adj_[v]) {
            Vertex w = inst_->graph.edge(e).other(v);
            if (r.seen[w]) continue;
            r.seen[w] = 1;
            r.parent[w] = v;
            r.in_edge[w] = e;
            r.cost[w] = r.in_edge[v] == -1 ? 0 : checked_add(r.cost[v], inst_->reload(r.in_edge[v], e));
            stack.push_back(w);
        }
    }
    return r;
}

std::optional<std::vector<EdgeId>> SpanningForest::path_edges(Vertex u, Vertex v) const {
    if (!same_component(u, v)) return std::nullopt;
    Reach r = explore(u);
    std::vector<EdgeId> path;
    for (Vertex w = v; w != u; w = r.parent[w]) path.push_back(r.in_edge[w]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<Cost> SpanningForest::reload_distance(Vertex u, Vertex v) const {
    if (!same_component(u, v)) return std::nullopt;
    Reach r = explore(u);
    return r.cost[v];
}

std::vector<std::optional<Cost>> SpanningForest::distances_from(Vertex src) const {
    Reach r = explore(src);
    std::vector<std::optional<Cost>> out(inst_->graph.num_vertices());
    for (int v = 0; v < inst_->graph.num_vertices(); ++v)
        if (r.seen[v]) out[v] = r.cost[v];
    return out;
}

Cost SpanningForest::eccentricity(Vertex v) const {
    Reach r = explore(v);
    Cost m = 0;
    for (int w = 0; w < inst_->graph.num_vertices(); ++w)
        if (r.seen[w]) m = std::max(m, r.cost[w]);
    return m;
}

Cost SpanningForest::reload_diameter() const {
    Cost m = 0;
    for (int v = 0; v < inst_->graph.num_vertices(); ++v) m = std::max(m, eccentricity(v));
    return m;
}

} // namespace rct
