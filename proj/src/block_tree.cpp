#include "rct/block_tree.hpp"

#include <algorithm>

namespace rct {

namespace {

struct BccResult {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<char> is_cut;
};

// Iterative Hopcroft-Tarjan biconnected components with an edge stack.
BccResult biconnected_components(const ColoredGraph& g) {
    int n = g.num_vertices();
    BccResult out;
    out.is_cut.assign(n, 0);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> estack;
    int timer = 0;

    struct Frame {
        Vertex v;
        size_t idx;
        EdgeId pedge;
    };

    for (Vertex s = 0; s < n; ++s) {
        if (disc[s] != -1) continue;
        std::vector<Frame> frames{{s, 0, -1}};
        disc[s] = low[s] = timer++;
        int root_children = 0;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.idx < g.incident(f.v).size()) {
                EdgeId e = g.incident(f.v)[f.idx++];
                if (e == f.pedge) continue;
                Vertex w = g.edge(e).other(f.v);
                if (disc[w] == -1) {
                    estack.push_back(e);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, 0, e});
                } else if (disc[w] < disc[f.v]) {
                    estack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                frames.pop_back();
                if (frames.empty()) continue;
                Vertex u = frames.back().v;
                low[u] = std::min(low[u], low[done.v]);
                if (u == s) ++root_children;
                if (low[done.v] >= disc[u]) {
                    if (u != s) out.is_cut[u] = 1;
                    std::vector<EdgeId> block;
                    while (true) {
                        EdgeId top = estack.back();
                        estack.pop_back();
                        block.push_back(top);
                        if (top == done.pedge) break;
                    }
                    out.blocks.push_back(std::move(block));
                }
            }
        }
        if (root_children >= 2) out.is_cut[s] = 1;
    }
    return out;
}

std::vector<Vertex> block_vertices(const ColoredGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<Vertex> vs;
    for (EdgeId e : edges) {
        vs.push_back(g.edge(e).u);
        vs.push_back(g.edge(e).v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Reorders a cycle block so verts starts at the anchor and edges[i] joins
// verts[i] with verts[i+1]; the anchor's smaller-id neighbor comes first.
void orient_cycle(const ColoredGraph& g, Block& b) {
    auto adj = [&](Vertex v) {
        std::vector<std::pair<Vertex, EdgeId>> r;
        for (EdgeId e : b.edges)
            if (g.edge(e).has(v)) r.push_back({g.edge(e).other(v), e});
        return r;
    };
    std::vector<Vertex> order{b.anchor};
    std::vector<EdgeId> eorder;
    auto first = adj(b.anchor);
    if (first.size() != 2) throw Error("internal: cycle block vertex degree is not 2");
    if (first[0].first > first[1].first) std::swap(first[0], first[1]);
    Vertex prev = b.anchor;
    Vertex cur = first[0].first;
    eorder.push_back(first[0].second);
    while (cur != b.anchor) {
        order.push_back(cur);
        auto around = adj(cur);
        if (around.size() != 2) throw Error("internal: cycle block vertex degree is not 2");
        auto step = around[0].first == prev ? around[1] : around[0];
        prev = cur;
        cur = step.first;
        eorder.push_back(step.second);
    }
    if (order.size() != b.verts.size()) throw Error("internal: cycle walk did not close");
    b.verts = std::move(order);
    b.edges = std::move(eorder);
}

} // namespace

BlockTree build_block_tree(const ColoredGraph& g) {
    int n = g.num_vertices();
    if (n == 0) throw PreconditionError("empty graph has no block tree");
    if (!g.is_connected()) throw PreconditionError("graph is not connected");

    BlockTree bt;
    BccResult bcc = biconnected_components(g);
    bt.is_cut = bcc.is_cut;

    for (Vertex v = 0; v < n; ++v)
        if (!bt.is_cut[v]) {
            bt.root = v;
            break;
        }
    if (bt.root == -1) throw Error("internal: every vertex is a cut vertex");

    if (n == 1) return bt; // no blocks

    // Validate each biconnected component as bridge or simple cycle.
    std::vector<std::vector<int>> blocks_at(n);
    for (auto& edges : bcc.blocks) {
        Block b;
        b.edges = std::move(edges);
        b.verts = block_vertices(g, b.edges);
        if (b.edges.size() == 1) {
            b.is_cycle = false;
        } else if (b.edges.size() == b.verts.size()) {
            b.is_cycle = true; // degree check happens while orienting
        } else {
            throw NotACactusError("a block with " + std::to_string(b.verts.size()) +
                                  " vertices and " + std::to_string(b.edges.size()) +
                                  " edges is neither a bridge nor a cycle");
        }
        int idx = static_cast<int>(bt.blocks.size());
        for (Vertex v : b.verts) blocks_at[v].push_back(idx);
        bt.blocks.push_back(std::move(b));
    }

    // Root the block forest at the unique block containing the root vertex.
    if (blocks_at[bt.root].size() != 1)
        throw Error("internal: root vertex lies in several blocks");
    bt.root_block = blocks_at[bt.root][0];
    bt.blocks[bt.root_block].anchor = bt.root;

    std::vector<int> bfs{bt.root_block};
    std::vector<char> seen(bt.blocks.size(), 0);
    seen[bt.root_block] = 1;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
        int bi = bfs[qi];
        for (Vertex v : bt.blocks[bi].verts) {
            if (v == bt.blocks[bi].anchor) continue;
            for (int ci : blocks_at[v]) {
                if (seen[ci]) continue;
                seen[ci] = 1;
                bt.blocks[ci].anchor = v;
                bt.blocks[ci].parent = bi;
                bt.blocks[bi].children.push_back(ci);
                bfs.push_back(ci);
            }
        }
    }
    for (char s : seen)
        if (!s) throw Error("internal: block forest is not connected");

    for (Block& b : bt.blocks) {
        if (b.is_cycle) {
            orient_cycle(g, b);
        } else if (b.verts[0] != b.anchor) {
            std::swap(b.verts[0], b.verts[1]);
        }
    }

    // Post-order: children before parents.
    std::vector<std::pair<int, size_t>> stack{{bt.root_block, 0}};
    while (!stack.empty()) {
        auto& [bi, ci] = stack.back();
        if (ci < bt.blocks[bi].children.size()) {
            stack.push_back({bt.blocks[bi].children[ci++], 0});
        } else {
            bt.post_order.push_back(bi);
            stack.pop_back();
        }
    }
    return bt;
}

} // namespace rct
