#include "rct/transfer.hpp"

#include <algorithm>
#include <queue>

namespace rct {

int TfForest::add_vertex(int real_id) {
    vreal.push_back(real_id);
    return num_vertices() - 1;
}

int TfForest::add_edge(int a, int b, EdgeId real) {
    if (a < 0 || a >= num_vertices() || b < 0 || b >= num_vertices() || a == b)
        throw InvalidArgument("forest edge endpoints out of range");
    edges.push_back({a, b, real});
    return num_edges() - 1;
}

int TfForest::find_vertex(int real_id) const {
    if (real_id < 0) return -1;
    for (int i = 0; i < num_vertices(); ++i)
        if (vreal[i] == real_id) return i;
    return -1;
}

std::vector<std::vector<std::pair<int, int>>> TfForest::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(num_vertices());
    for (int e = 0; e < num_edges(); ++e) {
        adj[edges[e].a].push_back({e, edges[e].b});
        adj[edges[e].b].push_back({e, edges[e].a});
    }
    return adj;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

bool TfForest::is_forest() const {
    Dsu d(num_vertices());
    for (const Edge& e : edges)
        if (!d.unite(e.a, e.b)) return false;
    return true;
}

std::vector<int> TfForest::components() const {
    Dsu d(num_vertices());
    for (const Edge& e : edges) d.unite(e.a, e.b);
    std::vector<int> comp(num_vertices(), -1);
    int next = 0;
    for (int v = 0; v < num_vertices(); ++v) {
        int r = d.find(v);
        if (comp[r] == -1) comp[r] = next++;
        comp[v] = comp[r];
    }
    return comp;
}

TfReduceResult reduce_forest(const TfForest& f, const std::vector<int>& keep) {
    const int n = f.num_vertices();
    for (int v : keep)
        if (v < 0 || v >= n) throw InvalidArgument("kept vertex out of range");
    if (!f.is_forest()) throw InvalidArgument("reduce requires a forest");

    std::vector<char> kept(n, 0);
    for (int v : keep) kept[v] = 1;
    {
        auto comp = f.components();
        int nc = 0;
        for (int c : comp) nc = std::max(nc, c + 1);
        std::vector<char> good(nc, 0);
        for (int v : keep) good[comp[v]] = 1;
        for (int v = 0; v < n; ++v)
            if (!good[comp[v]])
                throw PreconditionError("component of forest vertex " + std::to_string(v) +
                                        " holds no kept vertex");
    }

    // The kept set's closed neighborhood never changes during reduction, so
    // protection is decided once up front.
    std::vector<char> protec(n, 0);
    for (int v = 0; v < n; ++v) protec[v] = kept[v];
    for (const auto& e : f.edges) {
        if (kept[e.a]) protec[e.b] = 1;
        if (kept[e.b]) protec[e.a] = 1;
    }

    // Mutable edge records: originals first, composites appended. Dead records
    // either merged into a later record or died when a pendant vertex fell.
    struct Rec {
        int a, b;
        EdgeId real;
        bool alive = true;
        int merged_into = -1;
        int died_at = -1;
    };
    std::vector<Rec> recs;
    recs.reserve(f.num_edges());
    for (const auto& e : f.edges) recs.push_back({e.a, e.b, e.real, true, -1, -1});

    std::vector<std::vector<int>> adj(n); // live record indices per vertex
    for (int e = 0; e < f.num_edges(); ++e) {
        adj[recs[e].a].push_back(e);
        adj[recs[e].b].push_back(e);
    }
    std::vector<char> alive(n, 1);

    auto drop_from = [&](int v, int rec) {
        auto& lst = adj[v];
        lst.erase(std::find(lst.begin(), lst.end(), rec));
    };

    std::queue<int> work;
    for (int v = 0; v < n; ++v)
        if (!protec[v]) work.push(v);
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        if (!alive[v] || protec[v]) continue;
        if (adj[v].size() == 1) {
            int e = adj[v][0];
            int o = recs[e].a == v ? recs[e].b : recs[e].a;
            recs[e].alive = false;
            recs[e].died_at = v;
            drop_from(o, e);
            adj[v].clear();
            alive[v] = 0;
            if (!protec[o]) work.push(o);
        } else if (adj[v].size() == 2) {
            int e1 = adj[v][0], e2 = adj[v][1];
            int x = recs[e1].a == v ? recs[e1].b : recs[e1].a;
            int y = recs[e2].a == v ? recs[e2].b : recs[e2].a;
            int ne = static_cast<int>(recs.size());
            recs.push_back({x, y, -1, true, -1, -1});
            recs[e1].alive = false;
            recs[e1].merged_into = ne;
            recs[e2].alive = false;
            recs[e2].merged_into = ne;
            drop_from(x, e1);
            drop_from(y, e2);
            adj[x].push_back(ne);
            adj[y].push_back(ne);
            adj[v].clear();
            alive[v] = 0;
        } else if (adj[v].empty()) {
            throw Error("isolated unprotected vertex during reduction");
        }
        // Degree >= 3 stays: a branch vertex carries structure.
    }

    TfReduceResult out;
    std::vector<int> new_vidx(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) new_vidx[v] = out.forest.add_vertex(f.vreal[v]);
    std::vector<int> new_eidx(recs.size(), -1);
    for (size_t e = 0; e < recs.size(); ++e)
        if (recs[e].alive)
            new_eidx[e] =
                out.forest.add_edge(new_vidx[recs[e].a], new_vidx[recs[e].b], recs[e].real);

    // Collapse target per removed vertex: flood through removed vertices in
    // the original forest; the surviving boundary has one vertex (fold onto
    // it) or two (fold onto the composite edge spanning them).
    auto orig_adj = f.adjacency();
    std::vector<TfElement> phi(n, TfElement::vertex(-1));
    std::vector<char> visited(n, 0);
    for (int z = 0; z < n; ++z) {
        if (alive[z] || visited[z]) continue;
        std::vector<int> region, boundary;
        std::queue<int> q;
        q.push(z);
        visited[z] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            region.push_back(v);
            for (auto [e, o] : orig_adj[v]) {
                (void)e;
                if (alive[o]) {
                    if (std::find(boundary.begin(), boundary.end(), o) == boundary.end())
                        boundary.push_back(o);
                } else if (!visited[o]) {
                    visited[o] = 1;
                    q.push(o);
                }
            }
        }
        TfElement target;
        if (boundary.size() == 1) {
            target = TfElement::vertex(new_vidx[boundary[0]]);
        } else if (boundary.size() == 2) {
            int a = new_vidx[boundary[0]], b = new_vidx[boundary[1]];
            int found = -1;
            for (int e = 0; e < out.forest.num_edges(); ++e) {
                const auto& ed = out.forest.edges[e];
                if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a)) found = e;
            }
            if (found == -1) throw Error("two-sided collapse region without a spanning edge");
            target = TfElement::edge(found);
        } else {
            throw Error("collapse region with " + std::to_string(boundary.size()) +
                        " boundary vertices");
        }
        for (int v : region) phi[v] = target;
    }

    out.vertex_to.resize(n);
    for (int v = 0; v < n; ++v)
        out.vertex_to[v] = alive[v] ? TfElement::vertex(new_vidx[v]) : phi[v];

    out.edge_to.resize(f.num_edges());
    for (int e = 0; e < f.num_edges(); ++e) {
        int cur = e;
        while (recs[cur].merged_into != -1) cur = recs[cur].merged_into;
        if (recs[cur].alive)
            out.edge_to[e] = TfElement::edge(new_eidx[cur]);
        else
            out.edge_to[e] = phi[recs[cur].died_at];
    }
    return out;
}

namespace {

// Unique path between two vertices: edge indices in order. False when
// disconnected.
bool tf_path(const TfForest& f, const std::vector<std::vector<std::pair<int, int>>>& adj, int from,
             int to, std::vector<int>& eids) {
    eids.clear();
    if (from == to) return true;
    std::vector<int> pe(f.num_vertices(), -2);
    pe[from] = -1;
    std::queue<int> q;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (auto [e, o] : adj[v])
            if (pe[o] == -2) {
                pe[o] = e;
                q.push(o);
            }
    }
    if (pe[to] == -2) return false;
    int cur = to;
    while (cur != from) {
        eids.push_back(pe[cur]);
        cur = f.edges[pe[cur]].other(cur);
    }
    std::reverse(eids.begin(), eids.end());
    return true;
}

int shared_endpoint(const TfForest::Edge& x, const TfForest::Edge& y) {
    if (x.a == y.a || x.a == y.b) return x.a;
    if (x.b == y.a || x.b == y.b) return x.b;
    throw Error("consecutive walk edges share no vertex");
}

// Edge sequence connecting two elements, including the elements themselves
// when they are edges. False when disconnected.
bool element_walk(const TfForest& f, const std::vector<std::vector<std::pair<int, int>>>& adj,
                  TfElement from, TfElement to, std::vector<int>& walk) {
    int s = from.is_edge ? f.edges[from.idx].a : from.idx;
    int t = to.is_edge ? f.edges[to.idx].a : to.idx;
    if (!tf_path(f, adj, s, t, walk)) return false;
    if (from.is_edge && (walk.empty() || walk.front() != from.idx))
        walk.insert(walk.begin(), from.idx);
    if (to.is_edge && (walk.empty() || walk.back() != to.idx)) walk.push_back(to.idx);
    return true;
}

} // namespace

std::optional<Cost> fuse_transfer(const TfForest& combined, const std::vector<int>& side,
                                  int from_vertex, TfElement to, const TfAlphaFn& alpha,
                                  const TfBetaFn& beta) {
    if (static_cast<int>(side.size()) != combined.num_edges())
        throw InvalidArgument("side labels must cover every edge");
    if (!to.is_edge && to.idx == from_vertex) return Cost{0};
    if (to.is_edge &&
        (combined.edges[to.idx].a == from_vertex || combined.edges[to.idx].b == from_vertex))
        throw InvalidArgument("transfer target edge touches the start vertex");

    auto adj = combined.adjacency();
    std::vector<int> walk;
    if (!element_walk(combined, adj, TfElement::vertex(from_vertex), to, walk))
        return std::nullopt;

    Cost total = 0;
    int cur_start = from_vertex;
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        if (side[walk[i]] == side[walk[i + 1]]) continue;
        int b = shared_endpoint(combined.edges[walk[i]], combined.edges[walk[i + 1]]);
        auto seg = alpha(cur_start, TfElement::vertex(b), side[walk[i]]);
        if (!seg) throw Error("transfer value missing inside one side of a fusion");
        total = checked_add(total, *seg);
        EdgeId r1 = combined.edges[walk[i]].real, r2 = combined.edges[walk[i + 1]].real;
        if (r1 < 0 || r2 < 0) throw Error("side switch across a composite edge");
        total = checked_add(total, beta(r1, r2));
        cur_start = b;
    }
    auto last = alpha(cur_start, to, side[walk.back()]);
    if (!last) throw Error("transfer value missing for the final fusion segment");
    return checked_add(total, *last);
}

bool is_admissible(const TfForest& f, const std::vector<int>& terminals, Cost k,
                   const TfTableFn& alpha, const TfBetaFn& beta) {
    std::vector<char> is_term(f.num_vertices(), 0);
    for (int t : terminals) {
        if (t < 0 || t >= f.num_vertices()) throw InvalidArgument("terminal out of range");
        is_term[t] = 1;
    }

    std::vector<TfElement> elems;
    for (int v = 0; v < f.num_vertices(); ++v)
        if (!is_term[v]) elems.push_back(TfElement::vertex(v));
    for (int e = 0; e < f.num_edges(); ++e)
        if (!is_term[f.edges[e].a] && !is_term[f.edges[e].b]) elems.push_back(TfElement::edge(e));

    auto adj = f.adjacency();
    std::vector<int> walk;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            if (!element_walk(f, adj, elems[i], elems[j], walk)) continue;
            bool any_terminal = false;
            for (size_t p = 0; p + 1 < walk.size() && !any_terminal; ++p) {
                int b = shared_endpoint(f.edges[walk[p]], f.edges[walk[p + 1]]);
                if (is_term[b]) any_terminal = true;
            }
            if (!any_terminal) continue;
            bool ok = false;
            for (size_t p = 0; p + 1 < walk.size() && !ok; ++p) {
                int b = shared_endpoint(f.edges[walk[p]], f.edges[walk[p + 1]]);
                if (!is_term[b]) continue;
                EdgeId r1 = f.edges[walk[p]].real, r2 = f.edges[walk[p + 1]].real;
                if (r1 < 0 || r2 < 0)
                    throw Error("terminal with a composite incident edge on a transfer path");
                auto va = alpha(b, elems[i]);
                auto vb = alpha(b, elems[j]);
                if (!va || !vb) throw Error("transfer value missing at a path terminal");
                Cost total = checked_add(checked_add(*va, beta(r1, r2)), *vb);
                if (total <= k) ok = true;
            }
            if (!ok) return false;
        }
    }
    return true;
}

} // namespace rct
