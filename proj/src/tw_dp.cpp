#include "rct/tw_dp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "rct/forest.hpp"
#include "rct/nice_tree.hpp"
#include "rct/transfer.hpp"
#include "rct/types.hpp"

namespace rct {

namespace {

// One table entry: a partial forest over the processed subgraph, compressed
// down to the bag's closed branch structure, plus transfer values from every
// bag vertex to every element. Provenance fields reconstruct the witness.
struct Entry {
    TfForest f;
    std::vector<std::optional<Cost>> alpha; // bag rows x elements, row major
    int src = -1;                           // entry index in the child table
    int src2 = -1;                          // entry index in the second child
    EdgeId added = -1;                      // graph edge attached at this node
};

// Positional scheme shared by every entry at a node: elements are all forest
// vertices in index order, then the edges with no bag endpoint in index
// order. Vertex elements sit at their own index.
struct Layout {
    std::vector<int> term_idx; // forest vertex per bag position
    std::vector<TfElement> elems;
    std::vector<int> edge_pos; // forest edge -> element position, -1 if excluded
};

Layout make_layout(const TfForest& f, const std::vector<Vertex>& bag) {
    Layout lo;
    lo.term_idx.reserve(bag.size());
    std::vector<char> is_term(f.vreal.size(), 0);
    for (Vertex b : bag) {
        int idx = f.find_vertex(b);
        if (idx < 0) throw Error("table entry lost bag vertex " + std::to_string(b));
        lo.term_idx.push_back(idx);
        is_term[idx] = 1;
    }
    lo.elems.reserve(f.vreal.size() + f.edges.size());
    for (int v = 0; v < f.num_vertices(); ++v) lo.elems.push_back(TfElement::vertex(v));
    lo.edge_pos.assign(f.edges.size(), -1);
    for (int e = 0; e < f.num_edges(); ++e) {
        if (!is_term[f.edges[e].a] && !is_term[f.edges[e].b]) {
            lo.edge_pos[e] = static_cast<int>(lo.elems.size());
            lo.elems.push_back(TfElement::edge(e));
        }
    }
    return lo;
}

int element_pos(const Layout& lo, TfElement el) {
    if (!el.is_edge) return el.idx;
    int p = lo.edge_pos[el.idx];
    if (p < 0) throw Error("transfer lookup on a bag-incident edge");
    return p;
}

// Shape-canonical serialization. Vertices are relabeled by a BFS from the bag
// vertices with a deterministic edge order, so entries that differ only in
// vertex indices or in the identities of interior vertices and edges collide.
// Graph ids of non-bag vertices are intentionally left out: once compressed,
// only colors and shape influence any later step.
std::string canonical_key(const Instance& inst, const TfForest& f, const Layout& lo,
                          const std::vector<std::optional<Cost>>& alpha) {
    int nv = f.num_vertices();
    std::vector<int> label(nv, -1);
    std::vector<int> order;
    order.reserve(nv);
    std::deque<int> queue;
    for (int t : lo.term_idx) {
        label[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
    }
    auto adj = f.adjacency();
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        auto inc = adj[u];
        auto rank = [&](const std::pair<int, int>& eo) {
            const TfForest::Edge& ed = f.edges[eo.first];
            int color = ed.real >= 0 ? inst.graph.edge(ed.real).color : -1;
            int olab = label[eo.second] < 0 ? nv : label[eo.second];
            return std::make_tuple(ed.real < 0 ? 1 : 0, color, ed.real, f.vreal[eo.second], olab);
        };
        std::sort(inc.begin(), inc.end(),
                  [&](const auto& x, const auto& y) { return rank(x) < rank(y); });
        for (const auto& [e, ov] : inc) {
            (void)e;
            if (label[ov] < 0) {
                label[ov] = static_cast<int>(order.size());
                order.push_back(ov);
                queue.push_back(ov);
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (label[v] < 0) throw Error("table entry has a component without a bag vertex");

    std::vector<std::array<int, 4>> eshape;
    eshape.reserve(f.edges.size());
    for (const TfForest::Edge& ed : f.edges) {
        int la = label[ed.a], lb = label[ed.b];
        if (la > lb) std::swap(la, lb);
        eshape.push_back({la, lb, ed.real >= 0 ? 1 : 0,
                          ed.real >= 0 ? inst.graph.edge(ed.real).color : -1});
    }
    std::sort(eshape.begin(), eshape.end());

    // element positions in canonical order: vertices by label, then outside
    // edges by labeled endpoints (unique, since parallel edges cannot occur)
    std::vector<int> canon_pos;
    canon_pos.reserve(lo.elems.size());
    for (int l = 0; l < nv; ++l) canon_pos.push_back(order[l]);
    std::vector<std::pair<std::pair<int, int>, int>> ext;
    for (int e = 0; e < f.num_edges(); ++e) {
        if (lo.edge_pos[e] < 0) continue;
        int la = label[f.edges[e].a], lb = label[f.edges[e].b];
        if (la > lb) std::swap(la, lb);
        ext.push_back({{la, lb}, lo.edge_pos[e]});
    }
    std::sort(ext.begin(), ext.end());
    for (const auto& pr : ext) canon_pos.push_back(pr.second);

    std::string key;
    key.reserve(32 + eshape.size() * 12 + alpha.size() * 4);
    key += std::to_string(nv);
    key += ';';
    for (const auto& s : eshape) {
        for (int x : s) {
            key += std::to_string(x);
            key += ',';
        }
        key += '|';
    }
    key += '#';
    size_t ne = lo.elems.size();
    for (size_t r = 0; r < lo.term_idx.size(); ++r) {
        for (int pos : canon_pos) {
            const auto& val = alpha[r * ne + static_cast<size_t>(pos)];
            if (val)
                key += std::to_string(*val);
            else
                key += 'n';
            key += ',';
        }
        key += '|';
    }
    return key;
}

void validate_entry(const Instance& inst, const std::vector<Vertex>& bag, Cost k,
                    const Entry& en, const Layout& lo) {
    const TfForest& f = en.f;
    if (!f.is_forest()) throw Error("table entry is not a forest");
    int w = static_cast<int>(bag.size());
    std::vector<char> is_term(f.vreal.size(), 0);
    for (int t : lo.term_idx) is_term[t] = 1;

    auto comp = f.components();
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    std::vector<char> has_term(nc, 0);
    for (int t : lo.term_idx) has_term[comp[t]] = 1;
    for (int c = 0; c < nc; ++c)
        if (!has_term[c]) throw Error("table entry has a component without a bag vertex");

    // external means outside the closed neighborhood of the bag
    std::vector<char> nearby(f.vreal.size(), 0);
    std::vector<int> deg(f.vreal.size(), 0);
    for (int t : lo.term_idx) nearby[t] = 1;
    int outside_edges = 0;
    std::unordered_set<int> seen_real;
    for (const TfForest::Edge& ed : f.edges) {
        ++deg[ed.a];
        ++deg[ed.b];
        if (ed.real >= 0 && !seen_real.insert(ed.real).second)
            throw Error("graph edge appears twice in a table entry");
        if (!is_term[ed.a] && !is_term[ed.b]) {
            ++outside_edges;
            continue;
        }
        nearby[ed.a] = nearby[ed.b] = 1;
        if (ed.real < 0) throw Error("composite edge touching a bag vertex");
        const Edge& ge = inst.graph.edge(ed.real);
        Vertex ra = f.vreal[ed.a], rb = f.vreal[ed.b];
        if (!((ge.u == ra && ge.v == rb) || (ge.u == rb && ge.v == ra)))
            throw Error("forest edge endpoints disagree with the graph");
    }
    int external_vertices = 0;
    for (int v = 0; v < f.num_vertices(); ++v) {
        if (nearby[v]) continue;
        ++external_vertices;
        if (deg[v] < 3) throw Error("compressible vertex survived reduction");
    }
    if (external_vertices > std::max(0, w - 2))
        throw Error("compressed forest keeps too many external vertices");
    if (outside_edges > std::max(0, 2 * w - 3))
        throw Error("compressed forest keeps too many external edges");

    size_t ne = lo.elems.size();
    if (en.alpha.size() != static_cast<size_t>(w) * ne)
        throw Error("transfer table shape mismatch");
    for (int r = 0; r < w; ++r) {
        int tc = comp[lo.term_idx[r]];
        for (size_t p = 0; p < ne; ++p) {
            TfElement el = lo.elems[p];
            int ec = el.is_edge ? comp[f.edges[el.idx].a] : comp[el.idx];
            const auto& val = en.alpha[static_cast<size_t>(r) * ne + p];
            if ((tc == ec) != val.has_value())
                throw Error("transfer defined across components");
            if (val && *val > k) throw Error("transfer value beyond the budget");
        }
        const auto& diag = en.alpha[static_cast<size_t>(r) * ne + lo.term_idx[r]];
        if (!diag || *diag != 0) throw Error("bag vertex self-transfer is not zero");
    }
}

std::uint64_t derive_cap(const Instance& inst, const NiceTree& nt, Cost k) {
    const std::uint64_t hard = 1'000'000;
    long double d = inst.graph.max_degree();
    long double w1 = nt.width() + 1;
    long double kk = static_cast<long double>(std::min<Cost>(k, hard)) + 2.0L;
    long double bits = d * w1 * w1 * std::log2(kk) + 3.0L * w1 * std::log2((d + 2) * (w1 + 1));
    if (bits >= 20.0L) return hard;
    auto v = static_cast<std::uint64_t>(std::llround(std::pow(2.0L, bits)));
    return std::clamp<std::uint64_t>(v, 16, hard);
}

struct Dp {
    const Instance& inst;
    const NiceTree& nt;
    Cost k;
    DpOptions opt;
    DpStats stats;
    std::uint64_t cap;

    struct Table {
        std::vector<Entry> entries;
        std::vector<Layout> layouts;
        std::unordered_map<std::string, int> index;
    };
    std::vector<Table> tables;

    Dp(const Instance& inst_, const NiceTree& nt_, Cost k_, const DpOptions& opt_)
        : inst(inst_), nt(nt_), k(k_), opt(opt_) {
        cap = opt.table_cap ? opt.table_cap : derive_cap(inst, nt, k);
        stats.cap = cap;
        stats.width = nt.width();
    }

    TfBetaFn beta() const {
        return [this](EdgeId a, EdgeId b) { return inst.reload(a, b); };
    }

    bool admissible(const Entry& en, const Layout& lo) const {
        std::vector<int> rowmap(en.f.vreal.size(), -1);
        for (int r = 0; r < static_cast<int>(lo.term_idx.size()); ++r)
            rowmap[lo.term_idx[r]] = r;
        size_t ne = lo.elems.size();
        auto tab = [&](int t, TfElement el) -> std::optional<Cost> {
            if (rowmap[t] < 0) throw Error("admissibility query on a non-bag vertex");
            return en.alpha[static_cast<size_t>(rowmap[t]) * ne + element_pos(lo, el)];
        };
        return is_admissible(en.f, lo.term_idx, k, tab, beta());
    }

    void insert(int node, Entry&& en, Layout&& lo) {
        if (opt.validate_tables) validate_entry(inst, nt.nodes[node].bag, k, en, lo);
        std::string key = canonical_key(inst, en.f, lo, en.alpha);
        Table& tab = tables[node];
        if (tab.index.count(key)) {
            ++stats.deduped;
            return;
        }
        if (static_cast<std::uint64_t>(tab.entries.size()) >= cap) {
            stats.cap_tripped = true;
            throw ResourceLimitError("table cap of " + std::to_string(cap) +
                                     " entries exceeded at node " + std::to_string(node));
        }
        tab.index.emplace(std::move(key), static_cast<int>(tab.entries.size()));
        tab.entries.push_back(std::move(en));
        tab.layouts.push_back(std::move(lo));
        ++stats.inserted;
        stats.max_table = std::max(stats.max_table, tab.entries.size());
    }

    void do_leaf(int i) {
        Entry en;
        insert(i, std::move(en), make_layout(TfForest{}, nt.nodes[i].bag));
    }

    void do_introduce_vertex(int i) {
        const NiceNode& nd = nt.nodes[i];
        const Table& ct = tables[nd.child];
        Vertex v = nd.vertex;
        int w = static_cast<int>(nd.bag.size());
        int vrow = static_cast<int>(
            std::lower_bound(nd.bag.begin(), nd.bag.end(), v) - nd.bag.begin());
        for (int ci = 0; ci < static_cast<int>(ct.entries.size()); ++ci) {
            const Entry& ce = ct.entries[ci];
            const Layout& clo = ct.layouts[ci];
            Entry en;
            en.f = ce.f;
            en.src = ci;
            int vidx = en.f.add_vertex(v);
            size_t ne_old = clo.elems.size();
            size_t ne_new = ne_old + 1;
            en.alpha.assign(static_cast<size_t>(w) * ne_new, std::nullopt);
            // the new vertex is isolated: its row and column stay undefined
            // except the zero self-transfer
            for (int r = 0; r < w; ++r) {
                if (r == vrow) continue;
                int old_r = r < vrow ? r : r - 1;
                for (size_t p = 0; p < ne_old; ++p) {
                    size_t np = clo.elems[p].is_edge ? p + 1 : p;
                    en.alpha[static_cast<size_t>(r) * ne_new + np] =
                        ce.alpha[static_cast<size_t>(old_r) * ne_old + p];
                }
            }
            en.alpha[static_cast<size_t>(vrow) * ne_new + vidx] = Cost{0};
            insert(i, std::move(en), make_layout(en.f, nd.bag));
        }
    }

    void do_introduce_edge(int i) {
        const NiceNode& nd = nt.nodes[i];
        const Table& ct = tables[nd.child];
        const Edge& ge = inst.graph.edge(nd.edge);
        int w = static_cast<int>(nd.bag.size());
        for (int ci = 0; ci < static_cast<int>(ct.entries.size()); ++ci) {
            const Entry& ce = ct.entries[ci];
            const Layout& clo = ct.layouts[ci];
            {
                // the tree may simply not use this edge
                Entry raw;
                raw.f = ce.f;
                raw.alpha = ce.alpha;
                raw.src = ci;
                insert(i, std::move(raw), make_layout(raw.f, nd.bag));
            }
            int fx = ce.f.find_vertex(ge.u);
            int fy = ce.f.find_vertex(ge.v);
            if (fx < 0 || fy < 0) throw Error("introduced edge endpoint missing from entry");
            auto comp = ce.f.components();
            if (comp[fx] == comp[fy]) continue; // would close a cycle

            Entry en;
            en.f = ce.f;
            en.src = ci;
            en.added = nd.edge;
            int eidx = en.f.add_edge(fx, fy, nd.edge);
            ++stats.fusions;

            std::vector<int> rowmap(ce.f.vreal.size(), -1);
            for (int r = 0; r < w; ++r) rowmap[clo.term_idx[r]] = r;
            std::vector<int> side(en.f.edges.size(), 0);
            side[eidx] = 1;
            size_t ne = clo.elems.size();
            TfAlphaFn lookup = [&](int from, TfElement to, int s) -> std::optional<Cost> {
                if (s == 1) {
                    // the fresh edge alone: zero between its own endpoints
                    if (to.is_edge) throw Error("transfer query on the fused edge");
                    if ((from == fx || from == fy) && (to.idx == fx || to.idx == fy))
                        return Cost{0};
                    throw Error("transfer query outside the fused edge");
                }
                if (rowmap[from] < 0) throw Error("side switch at a non-bag vertex");
                return ce.alpha[static_cast<size_t>(rowmap[from]) * ne + element_pos(clo, to)];
            };

            en.alpha.assign(static_cast<size_t>(w) * ne, std::nullopt);
            bool over = false;
            for (int r = 0; r < w && !over; ++r) {
                int rt = clo.term_idx[r];
                for (size_t p = 0; p < ne; ++p) {
                    TfElement el = clo.elems[p];
                    int ec = el.is_edge ? comp[ce.f.edges[el.idx].a] : comp[el.idx];
                    if (ec == comp[rt]) {
                        // path untouched by the new edge
                        en.alpha[static_cast<size_t>(r) * ne + p] =
                            ce.alpha[static_cast<size_t>(r) * ne + p];
                        continue;
                    }
                    auto val = fuse_transfer(en.f, side, rt, el, lookup, beta());
                    if (val && *val > k) {
                        over = true;
                        break;
                    }
                    en.alpha[static_cast<size_t>(r) * ne + p] = val;
                }
            }
            if (over) {
                ++stats.rejected_budget;
                continue;
            }
            Layout nlo = make_layout(en.f, nd.bag);
            if (!admissible(en, nlo)) {
                ++stats.rejected_admissibility;
                continue;
            }
            insert(i, std::move(en), std::move(nlo));
        }
    }

    void do_forget(int i) {
        const NiceNode& nd = nt.nodes[i];
        const Table& ct = tables[nd.child];
        const std::vector<Vertex>& cbag = nt.nodes[nd.child].bag;
        int w_old = static_cast<int>(cbag.size());
        int w_new = static_cast<int>(nd.bag.size());
        int vrow = static_cast<int>(
            std::lower_bound(cbag.begin(), cbag.end(), nd.vertex) - cbag.begin());
        for (int ci = 0; ci < static_cast<int>(ct.entries.size()); ++ci) {
            const Entry& ce = ct.entries[ci];
            const Layout& clo = ct.layouts[ci];
            int fv = clo.term_idx[vrow];
            auto comp = ce.f.components();

            if (nd.bag.empty()) {
                // last bag vertex: the processed subgraph is the whole graph,
                // so the entry must already be one spanning tree
                int nc = 0;
                for (int c : comp) nc = std::max(nc, c + 1);
                if (nc != 1) throw Error("final forget over a disconnected entry");
                Entry en;
                en.src = ci;
                insert(i, std::move(en), make_layout(TfForest{}, nd.bag));
                continue;
            }

            // the forgotten vertex's component must stay represented
            bool keeps = false;
            for (int r = 0; r < w_old && !keeps; ++r)
                keeps = r != vrow && comp[clo.term_idx[r]] == comp[fv];
            if (!keeps) continue;

            std::vector<int> keep;
            keep.reserve(w_new);
            for (int r = 0; r < w_old; ++r)
                if (r != vrow) keep.push_back(clo.term_idx[r]);
            TfReduceResult red = reduce_forest(ce.f, keep);

            Entry en;
            en.src = ci;
            en.f = red.forest;
            Layout nlo = make_layout(en.f, nd.bag);
            size_t ne_old = clo.elems.size();
            size_t ne_new = nlo.elems.size();

            std::vector<int> fold_to(ne_old, -1);
            for (size_t p = 0; p < ne_old; ++p) {
                TfElement el = clo.elems[p];
                TfElement tgt = el.is_edge ? red.edge_to[el.idx] : red.vertex_to[el.idx];
                fold_to[p] = element_pos(nlo, tgt);
            }

            en.alpha.assign(static_cast<size_t>(w_new) * ne_new, std::nullopt);
            for (int r = 0; r < w_new; ++r) {
                int old_r = r < vrow ? r : r + 1;
                for (size_t p = 0; p < ne_old; ++p) {
                    const auto& val = ce.alpha[static_cast<size_t>(old_r) * ne_old + p];
                    if (!val) continue;
                    auto& slot =
                        en.alpha[static_cast<size_t>(r) * ne_new + static_cast<size_t>(fold_to[p])];
                    if (!slot || *slot < *val) slot = val;
                }
            }
            // edges that just left the bag's reach enter the domain with no
            // folded content; they start at zero within their component
            auto ncomp = en.f.components();
            for (int r = 0; r < w_new; ++r) {
                int rt = nlo.term_idx[r];
                for (size_t p = 0; p < ne_new; ++p) {
                    TfElement el = nlo.elems[p];
                    int ec = el.is_edge ? ncomp[en.f.edges[el.idx].a] : ncomp[el.idx];
                    auto& slot = en.alpha[static_cast<size_t>(r) * ne_new + p];
                    if (ncomp[rt] == ec) {
                        if (!slot) slot = Cost{0};
                    } else if (slot) {
                        throw Error("transfer folded across components");
                    }
                }
            }
            if (!admissible(en, nlo)) {
                ++stats.rejected_admissibility;
                continue;
            }
            insert(i, std::move(en), std::move(nlo));
        }
    }

    void do_join(int i) {
        const NiceNode& nd = nt.nodes[i];
        const Table& t1 = tables[nd.child];
        const Table& t2 = tables[nd.child2];
        const std::vector<Vertex>& bag = nd.bag;
        int w = static_cast<int>(bag.size());
        for (int i1 = 0; i1 < static_cast<int>(t1.entries.size()); ++i1) {
            const Entry& e1 = t1.entries[i1];
            const Layout& lo1 = t1.layouts[i1];
            auto comp1 = e1.f.components();
            std::unordered_set<int> reals1;
            for (const auto& ed : e1.f.edges)
                if (ed.real >= 0) reals1.insert(ed.real);
            for (int i2 = 0; i2 < static_cast<int>(t2.entries.size()); ++i2) {
                const Entry& e2 = t2.entries[i2];
                const Layout& lo2 = t2.layouts[i2];

                Entry en;
                en.f = e1.f;
                en.src = i1;
                en.src2 = i2;
                int m1 = e1.f.num_edges();
                std::vector<int> map2(e2.f.vreal.size(), -1);
                for (int v2 = 0; v2 < e2.f.num_vertices(); ++v2) {
                    Vertex real = e2.f.vreal[v2];
                    int in1 = en.f.find_vertex(real);
                    if (std::binary_search(bag.begin(), bag.end(), real)) {
                        if (in1 < 0) throw Error("bag vertex missing from a join side");
                        map2[v2] = in1;
                    } else {
                        if (in1 >= 0) throw Error("join sides share a non-bag vertex");
                        map2[v2] = en.f.add_vertex(real);
                    }
                }
                for (const auto& ed : e2.f.edges) {
                    if (ed.real >= 0 && reals1.count(ed.real))
                        throw Error("graph edge present on both join sides");
                    en.f.add_edge(map2[ed.a], map2[ed.b], ed.real);
                }
                if (!en.f.is_forest()) continue; // union closes a cycle
                ++stats.fusions;

                Layout nlo = make_layout(en.f, bag);
                size_t ne = nlo.elems.size();
                size_t ne1 = lo1.elems.size();
                size_t ne2 = lo2.elems.size();
                auto comp2 = e2.f.components();

                std::vector<int> to1(en.f.vreal.size(), -1), to2(en.f.vreal.size(), -1);
                for (int v = 0; v < e1.f.num_vertices(); ++v) to1[v] = v;
                for (int v2 = 0; v2 < static_cast<int>(map2.size()); ++v2) to2[map2[v2]] = v2;
                std::vector<int> rowmap(en.f.vreal.size(), -1);
                for (int r = 0; r < w; ++r) rowmap[nlo.term_idx[r]] = r;
                std::vector<int> side(en.f.edges.size(), 0);
                for (int e = m1; e < en.f.num_edges(); ++e) side[e] = 1;

                TfAlphaFn lookup = [&](int from, TfElement to, int s) -> std::optional<Cost> {
                    if (rowmap[from] < 0) throw Error("side switch at a non-bag vertex");
                    size_t row = static_cast<size_t>(rowmap[from]);
                    if (s == 0) {
                        int pos;
                        if (to.is_edge) {
                            if (to.idx >= m1) throw Error("transfer query off-side");
                            pos = element_pos(lo1, to);
                        } else {
                            if (to1[to.idx] < 0) throw Error("transfer query off-side");
                            pos = to1[to.idx];
                        }
                        return e1.alpha[row * ne1 + static_cast<size_t>(pos)];
                    }
                    int pos;
                    if (to.is_edge) {
                        if (to.idx < m1) throw Error("transfer query off-side");
                        pos = element_pos(lo2, TfElement::edge(to.idx - m1));
                    } else {
                        if (to2[to.idx] < 0) throw Error("transfer query off-side");
                        pos = to2[to.idx];
                    }
                    return e2.alpha[row * ne2 + static_cast<size_t>(pos)];
                };

                en.alpha.assign(static_cast<size_t>(w) * ne, std::nullopt);
                bool over = false;
                for (int r = 0; r < w && !over; ++r) {
                    int rt = nlo.term_idx[r];
                    for (size_t p = 0; p < ne; ++p) {
                        TfElement el = nlo.elems[p];
                        auto& slot = en.alpha[static_cast<size_t>(r) * ne + p];
                        // paths inside one side are untouched by the union
                        if (el.is_edge) {
                            int e = el.idx;
                            if (e < m1 && comp1[e1.f.edges[e].a] == comp1[to1[rt]]) {
                                slot = e1.alpha[static_cast<size_t>(r) * ne1 +
                                                static_cast<size_t>(element_pos(lo1, el))];
                                continue;
                            }
                            if (e >= m1 &&
                                comp2[e2.f.edges[e - m1].a] == comp2[to2[rt]]) {
                                slot = e2.alpha[static_cast<size_t>(r) * ne2 +
                                                static_cast<size_t>(element_pos(
                                                    lo2, TfElement::edge(e - m1)))];
                                continue;
                            }
                        } else {
                            int v = el.idx;
                            if (to1[v] >= 0 && comp1[to1[v]] == comp1[to1[rt]]) {
                                slot = e1.alpha[static_cast<size_t>(r) * ne1 +
                                                static_cast<size_t>(to1[v])];
                                continue;
                            }
                            if (to2[v] >= 0 && comp2[to2[v]] == comp2[to2[rt]]) {
                                slot = e2.alpha[static_cast<size_t>(r) * ne2 +
                                                static_cast<size_t>(to2[v])];
                                continue;
                            }
                        }
                        auto val = fuse_transfer(en.f, side, rt, el, lookup, beta());
                        if (val && *val > k) {
                            over = true;
                            break;
                        }
                        slot = val;
                    }
                }
                if (over) {
                    ++stats.rejected_budget;
                    continue;
                }
                if (!admissible(en, nlo)) {
                    ++stats.rejected_admissibility;
                    continue;
                }
                insert(i, std::move(en), std::move(nlo));
            }
        }
    }

    void run() {
        tables.assign(nt.nodes.size(), {});
        for (int i = 0; i < static_cast<int>(nt.nodes.size()); ++i) {
            switch (nt.nodes[i].kind) {
            case NiceNode::Kind::Leaf: do_leaf(i); break;
            case NiceNode::Kind::IntroduceVertex: do_introduce_vertex(i); break;
            case NiceNode::Kind::IntroduceEdge: do_introduce_edge(i); break;
            case NiceNode::Kind::Forget: do_forget(i); break;
            case NiceNode::Kind::Join: do_join(i); break;
            }
            ++stats.nodes;
        }
    }

    DpDecision result() const {
        const Table& rt = tables[nt.root];
        if (rt.entries.empty()) return {};
        std::vector<EdgeId> out;
        std::vector<std::pair<int, int>> stack{{nt.root, 0}};
        while (!stack.empty()) {
            auto [node, ei] = stack.back();
            stack.pop_back();
            const Entry& en = tables[node].entries[ei];
            const NiceNode& nd = nt.nodes[node];
            switch (nd.kind) {
            case NiceNode::Kind::Leaf: break;
            case NiceNode::Kind::IntroduceVertex:
            case NiceNode::Kind::Forget:
                stack.push_back({nd.child, en.src});
                break;
            case NiceNode::Kind::IntroduceEdge:
                if (en.added >= 0) out.push_back(en.added);
                stack.push_back({nd.child, en.src});
                break;
            case NiceNode::Kind::Join:
                stack.push_back({nd.child, en.src});
                stack.push_back({nd.child2, en.src2});
                break;
            }
        }
        std::sort(out.begin(), out.end());
        if (static_cast<int>(out.size()) != inst.graph.num_vertices() - 1)
            throw Error("witness edge count mismatch");
        SpanningForest sf(inst);
        for (EdgeId e : out) sf.add_edge(e);
        if (!sf.spans()) throw Error("witness does not span the graph");
        if (sf.reload_diameter() > k) throw Error("witness exceeds the budget");
        return {true, std::move(out)};
    }
};

} // namespace

DpDecision twdp_decision(const Instance& inst, const TreeDecomposition& td, Cost k,
                         const DpOptions& opt, DpStats* stats) {
    if (stats) *stats = DpStats{};
    if (inst.graph.num_vertices() <= 1) return {true, {}};
    if (!inst.graph.is_connected())
        throw PreconditionError("graph is not connected; no spanning tree exists");
    NiceTree nt = build_nice_tree(inst.graph, td);
    Dp dp(inst, nt, k, opt);
    try {
        dp.run();
    } catch (...) {
        if (stats) *stats = dp.stats;
        throw;
    }
    DpDecision d = dp.result();
    if (stats) *stats = dp.stats;
    return d;
}

DpResult twdp_minimize(const Instance& inst, const TreeDecomposition& td,
                       const DpOptions& opt, DpStats* stats) {
    auto d0 = twdp_decision(inst, td, 0, opt, stats);
    if (d0.yes) return {Cost{0}, std::move(d0.tree)};

    int nv = inst.graph.num_vertices();
    Cost maxc = inst.costs.max_cost();
    unsigned __int128 ceil128 = static_cast<unsigned __int128>(nv - 1) * maxc;
    Cost kmax = ceil128 > static_cast<unsigned __int128>(kMaxCost) ? kMaxCost
                                                                   : static_cast<Cost>(ceil128);
    if (kmax == 0) throw Error("internal: zero cost ceiling but k=0 was refused");

    Cost lo = 1, hi = 1;
    DpDecision best;
    while (true) {
        best = twdp_decision(inst, td, hi, opt, stats);
        if (best.yes) break;
        if (hi >= kmax) throw Error("internal: no spanning tree within the cost ceiling");
        lo = hi + 1;
        hi = hi > kmax / 2 ? kmax : hi * 2;
    }
    while (lo < hi) {
        Cost mid = lo + (hi - lo) / 2;
        auto d = twdp_decision(inst, td, mid, opt, stats);
        if (d.yes) {
            hi = mid;
            best = std::move(d);
        } else {
            lo = mid + 1;
        }
    }
    return {hi, std::move(best.tree)};
}

} // namespace rct
