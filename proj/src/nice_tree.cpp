#include "rct/nice_tree.hpp"

#include <algorithm>
#include <iterator>

#include "rct/types.hpp"

namespace rct {

int NiceTree::width() const {
    int w = -1;
    for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
    return w;
}

namespace {

struct Builder {
    const ColoredGraph& g;
    std::vector<NiceNode> nodes;

    int add(NiceNode nd) {
        nodes.push_back(std::move(nd));
        return static_cast<int>(nodes.size()) - 1;
    }

    int leaf() {
        NiceNode nd;
        nd.kind = NiceNode::Kind::Leaf;
        return add(nd);
    }

    int introduce(int below, Vertex v) {
        NiceNode nd;
        nd.kind = NiceNode::Kind::IntroduceVertex;
        nd.bag = nodes[below].bag;
        nd.bag.insert(std::lower_bound(nd.bag.begin(), nd.bag.end(), v), v);
        nd.child = below;
        nd.vertex = v;
        return add(std::move(nd));
    }

    int forget(int below, Vertex v) {
        NiceNode nd;
        nd.kind = NiceNode::Kind::Forget;
        nd.bag = nodes[below].bag;
        nd.bag.erase(std::find(nd.bag.begin(), nd.bag.end(), v));
        nd.child = below;
        nd.vertex = v;
        return add(std::move(nd));
    }

    int introduce_edge(int below, EdgeId e) {
        NiceNode nd;
        nd.kind = NiceNode::Kind::IntroduceEdge;
        nd.bag = nodes[below].bag;
        nd.child = below;
        nd.edge = e;
        return add(std::move(nd));
    }

    int join(int left, int right) {
        NiceNode nd;
        nd.kind = NiceNode::Kind::Join;
        nd.bag = nodes[left].bag;
        nd.child = left;
        nd.child2 = right;
        return add(std::move(nd));
    }

    // Leaf plus introductions building up exactly `bag`.
    int fresh_chain(const std::vector<Vertex>& bag) {
        int h = leaf();
        for (Vertex v : bag) h = introduce(h, v);
        return h;
    }

    // Forgets then introductions turning the head's bag into `target`.
    int morph(int head, const std::vector<Vertex>& target) {
        std::vector<Vertex> drop, gain;
        std::set_difference(nodes[head].bag.begin(), nodes[head].bag.end(), target.begin(),
                            target.end(), std::back_inserter(drop));
        std::set_difference(target.begin(), target.end(), nodes[head].bag.begin(),
                            nodes[head].bag.end(), std::back_inserter(gain));
        for (Vertex v : drop) head = forget(head, v);
        for (Vertex v : gain) head = introduce(head, v);
        return head;
    }
};

} // namespace

NiceTree build_nice_tree(const ColoredGraph& g, const TreeDecomposition& td) {
    if (auto bad = validate_decomposition(g, td))
        throw InvalidArgument("decomposition rejected: " + *bad);

    const int nb = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj(nb);
    for (const auto& [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Root the decomposition at bag 0; children-first order for edge placement
    // and construction.
    std::vector<int> parent(nb, -1), order;
    {
        std::vector<int> stack = {0};
        std::vector<char> seen(nb, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            order.push_back(b);
            for (int c : adj[b])
                if (!seen[c]) {
                    seen[c] = 1;
                    parent[c] = b;
                    stack.push_back(c);
                }
        }
        std::reverse(order.begin(), order.end()); // children before parents
    }
    std::vector<int> depth_rank(nb);
    for (int i = 0; i < nb; ++i) depth_rank[order[i]] = i;

    // Each edge is handled at the first (children-first) bag containing both
    // endpoints.
    std::vector<std::vector<EdgeId>> edges_at(nb);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        int best = -1;
        for (int b = 0; b < nb; ++b) {
            if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), ed.u) &&
                std::binary_search(td.bags[b].begin(), td.bags[b].end(), ed.v)) {
                if (best == -1 || depth_rank[b] < depth_rank[best]) best = b;
            }
        }
        edges_at[best].push_back(e);
    }

    Builder bld{g, {}};
    std::vector<int> head(nb, -1);
    for (int b : order) {
        int h = bld.fresh_chain(td.bags[b]);
        for (int c : adj[b]) {
            if (c == parent[b]) continue;
            int ch = bld.morph(head[c], td.bags[b]);
            h = bld.join(h, ch);
        }
        std::sort(edges_at[b].begin(), edges_at[b].end());
        for (EdgeId e : edges_at[b]) h = bld.introduce_edge(h, e);
        head[b] = h;
    }

    int h = head[0];
    std::vector<Vertex> top = bld.nodes[h].bag;
    for (Vertex v : top) h = bld.forget(h, v);

    NiceTree nt;
    nt.nodes = std::move(bld.nodes);
    nt.root = h;
    return nt;
}

std::optional<std::string> validate_nice_tree(const ColoredGraph& g, const NiceTree& nt) {
    const int nn = static_cast<int>(nt.nodes.size());
    if (nn == 0) return "no nodes";
    if (nt.root != nn - 1) return "root must be the last node";

    std::vector<int> edge_count(g.num_edges(), 0);
    std::vector<char> used(nn, 0);

    for (int i = 0; i < nn; ++i) {
        const NiceNode& nd = nt.nodes[i];
        if (!std::is_sorted(nd.bag.begin(), nd.bag.end())) return "node bag not sorted";
        auto require_child = [&](int c) -> std::optional<std::string> {
            if (c < 0 || c >= i) return "node " + std::to_string(i) + " child out of order";
            if (used[c]) return "node " + std::to_string(c) + " has two parents";
            used[c] = 1;
            return std::nullopt;
        };
        switch (nd.kind) {
        case NiceNode::Kind::Leaf:
            if (!nd.bag.empty()) return "leaf bag not empty";
            break;
        case NiceNode::Kind::IntroduceVertex: {
            if (auto r = require_child(nd.child)) return r;
            auto expect = nt.nodes[nd.child].bag;
            expect.insert(std::lower_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
            if (expect != nd.bag || std::count(nd.bag.begin(), nd.bag.end(), nd.vertex) != 1)
                return "introduce node " + std::to_string(i) + " bag mismatch";
            break;
        }
        case NiceNode::Kind::Forget: {
            if (auto r = require_child(nd.child)) return r;
            auto expect = nt.nodes[nd.child].bag;
            auto it = std::find(expect.begin(), expect.end(), nd.vertex);
            if (it == expect.end()) return "forget node " + std::to_string(i) + " drops absent vertex";
            expect.erase(it);
            if (expect != nd.bag) return "forget node " + std::to_string(i) + " bag mismatch";
            break;
        }
        case NiceNode::Kind::IntroduceEdge: {
            if (auto r = require_child(nd.child)) return r;
            if (nd.bag != nt.nodes[nd.child].bag)
                return "edge node " + std::to_string(i) + " changes the bag";
            if (nd.edge < 0 || nd.edge >= g.num_edges())
                return "edge node " + std::to_string(i) + " has no edge";
            const Edge& ed = g.edge(nd.edge);
            if (!std::binary_search(nd.bag.begin(), nd.bag.end(), ed.u) ||
                !std::binary_search(nd.bag.begin(), nd.bag.end(), ed.v))
                return "edge node " + std::to_string(i) + " endpoints not in bag";
            ++edge_count[nd.edge];
            break;
        }
        case NiceNode::Kind::Join: {
            if (auto r = require_child(nd.child)) return r;
            if (auto r = require_child(nd.child2)) return r;
            if (nt.nodes[nd.child].bag != nd.bag || nt.nodes[nd.child2].bag != nd.bag)
                return "join node " + std::to_string(i) + " children bags differ";
            break;
        }
        }
    }
    if (!nt.nodes[nt.root].bag.empty()) return "root bag not empty";
    for (int i = 0; i + 1 < nn; ++i)
        if (!used[i]) return "node " + std::to_string(i) + " is unreachable";
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (edge_count[e] != 1)
            return "edge " + std::to_string(e) + " introduced " + std::to_string(edge_count[e]) +
                   " times";

    // Vertex lifetimes: once forgotten under a subtree, a vertex must not
    // reappear above. Equivalent to the subtree-connectivity axiom here.
    std::vector<std::vector<char>> gone(nn); // per node: vertex forgotten somewhere below
    for (int i = 0; i < nn; ++i) {
        const NiceNode& nd = nt.nodes[i];
        std::vector<char> cur(g.num_vertices(), 0);
        auto merge = [&](int c) {
            for (Vertex v = 0; v < g.num_vertices(); ++v) cur[v] |= gone[c][v];
        };
        if (nd.child >= 0) merge(nd.child);
        if (nd.child2 >= 0) merge(nd.child2);
        if (nd.kind == NiceNode::Kind::Forget) cur[nd.vertex] = 1;
        for (Vertex v : nd.bag)
            if (cur[v]) return "vertex " + std::to_string(v) + " reappears after being forgotten";
        gone[i] = std::move(cur);
    }
    return std::nullopt;
}

} // namespace rct
