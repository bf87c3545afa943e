#include "rct/graph.hpp"

#include <algorithm>
#include <queue>

namespace rct {

ColoredGraph::ColoredGraph(int num_vertices) : num_vertices_(num_vertices) {
    if (num_vertices < 0) throw InvalidArgument("negative vertex count");
    incident_.resize(num_vertices);
}

void ColoredGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(num_vertices_) + ")");
}

EdgeId ColoredGraph::add_edge(Vertex u, Vertex v, Color color) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self loop at vertex " + std::to_string(u));
    if (color < 0) throw InvalidArgument("negative color");
    if (find_edge(u, v) != -1)
        throw InvalidArgument("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, color});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
}

const Edge& ColoredGraph::edge(EdgeId e) const {
    if (e < 0 || e >= num_edges()) throw InvalidArgument("edge id out of range");
    return edges_[e];
}

const std::vector<EdgeId>& ColoredGraph::incident(Vertex v) const {
    check_vertex(v);
    return incident_[v];
}

int ColoredGraph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < num_vertices_; ++v) d = std::max(d, degree(v));
    return d;
}

EdgeId ColoredGraph::find_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& inc = incident_[degree(u) <= degree(v) ? u : v];
    Vertex a = degree(u) <= degree(v) ? u : v;
    Vertex b = a == u ? v : u;
    for (EdgeId e : inc)
        if (edges_[e].other(a) == b) return e;
    return -1;
}

bool ColoredGraph::is_connected() const {
    if (num_vertices_ <= 1) return true;
    std::vector<char> seen(num_vertices_, 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (EdgeId e : incident_[v]) {
            Vertex w = edges_[e].other(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == num_vertices_;
}

bool ColoredGraph::is_cactus() const {
    // DFS counting back edges per component; a graph is a cactus iff every
    // edge lies on at most one cycle, equivalently every biconnected block is
    // an edge or a simple cycle. We check the block characterization: within
    // each block, #edges <= #vertices.
    // Simpler equivalent check: DFS, and for each vertex the number of back
    // edges "passing over" any tree edge is at most 1. Implemented via
    // counting cycles through each tree edge.
    int n = num_vertices_;
    std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<int> parent_edge(n, -1);
    std::vector<int> depth(n, 0);
    std::vector<int> cover(n, 0); // how many back edges pass over the tree edge to parent
    // iterative DFS
    for (Vertex root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        std::vector<std::pair<Vertex, size_t>> stack;
        stack.push_back({root, 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < incident_[v].size()) {
                EdgeId e = incident_[v][idx++];
                if (e == parent_edge[v]) continue;
                Vertex w = edges_[e].other(v);
                if (state[w] == 0) {
                    state[w] = 1;
                    parent_edge[w] = e;
                    depth[w] = depth[v] + 1;
                    stack.push_back({w, 0});
                } else if (state[w] == 1) {
                    if (depth[w] < depth[v]) {
                        // back edge v -> w: covers tree edges from v up to w
                        cover[v] += 1;
                        cover[w] -= 1;
                    }
                }
            } else {
                state[v] = 2;
                stack.pop_back();
                if (!stack.empty()) {
                    Vertex p = stack.back().first;
                    if (cover[v] > 1) return false;
                    cover[p] += cover[v];
                }
            }
        }
        if (cover[root] != 0) return false; // balanced by construction
    }
    return true;
}

ReloadCostTable::ReloadCostTable(int num_colors, Cost fill) : num_colors_(num_colors) {
    if (num_colors < 0) throw InvalidArgument("negative color count");
    table_.assign(static_cast<size_t>(num_colors) * num_colors, fill);
}

void ReloadCostTable::check_color(Color c) const {
    if (c < 0 || c >= num_colors_)
        throw InvalidArgument("color " + std::to_string(c) + " out of range [0," +
                              std::to_string(num_colors_) + ")");
}

Cost ReloadCostTable::get(Color a, Color b) const {
    check_color(a);
    check_color(b);
    return table_[static_cast<size_t>(a) * num_colors_ + b];
}

void ReloadCostTable::set(Color a, Color b, Cost value) {
    check_color(a);
    check_color(b);
    table_[static_cast<size_t>(a) * num_colors_ + b] = value;
    table_[static_cast<size_t>(b) * num_colors_ + a] = value;
}

Cost ReloadCostTable::max_cost() const {
    Cost m = 0;
    for (Cost c : table_) m = std::max(m, c);
    return m;
}

bool ReloadCostTable::satisfies_triangle_inequality() const {
    for (Color a = 0; a < num_colors_; ++a)
        for (Color b = 0; b < num_colors_; ++b)
            for (Color c = 0; c < num_colors_; ++c) {
                Cost lhs = get(a, c);
                Cost rhs = checked_add(get(a, b), get(b, c));
                if (lhs > rhs) return false;
            }
    return true;
}

Instance::Instance(ColoredGraph g, ReloadCostTable c) : graph(std::move(g)), costs(std::move(c)) {
    for (const Edge& e : graph.edges())
        if (e.color >= costs.num_colors())
            throw InvalidArgument("edge color " + std::to_string(e.color) +
                                  " has no row in the cost table");
}

Cost Instance::reload(EdgeId a, EdgeId b) const {
    const Edge& ea = graph.edge(a);
    const Edge& eb = graph.edge(b);
    if (!(eb.has(ea.u) || eb.has(ea.v)))
        throw InvalidArgument("reload cost queried for edges with no shared vertex");
    return costs.get(ea.color, eb.color);
}

bool Instance::satisfies_triangle_inequality() const {
    // For every vertex v and ordered triple of distinct edges at v.
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
        const auto& inc = graph.incident(v);
        for (EdgeId a : inc)
            for (EdgeId b : inc)
                for (EdgeId c : inc) {
                    if (a == b || b == c || a == c) continue;
                    Cost lhs = reload(a, c);
                    Cost rhs = checked_add(reload(a, b), reload(b, c));
                    if (lhs > rhs) return false;
                }
    }
    return true;
}

Cost path_reload_cost(const Instance& inst, const std::vector<EdgeId>& path) {
    Cost total = 0;
    for (size_t i = 1; i < path.size(); ++i) {
        const Edge& prev = inst.graph.edge(path[i - 1]);
        const Edge& cur = inst.graph.edge(path[i]);
        if (!(cur.has(prev.u) || cur.has(prev.v)))
            throw InvalidArgument("walk has consecutive edges with no shared vertex");
        total = checked_add(total, inst.costs.get(prev.color, cur.color));
    }
    return total;
}

} // namespace rct
