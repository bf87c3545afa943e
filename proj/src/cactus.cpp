#include "rct/cactus.hpp"

#include <algorithm>

#include "rct/block_tree.hpp"
#include "rct/forest.hpp"
#include "rct/twosat.hpp"

namespace rct {

namespace {

struct Lambda {
    bool defined = false;
    std::vector<EdgeId> tree; // spans the block's whole subtree region
    Cost i0 = 0, j0 = 0;
};

// A selectable slice of a cycle child's partial solution: the half of
// lambda[child][split] on one side of the omitted edge. Every nonsingleton
// slice meets its anchor through exactly one edge (the gate).
struct Arc {
    int child = -1;
    Vertex anchor = -1;
    int split = 0;
    bool left = false;
    std::vector<EdgeId> edges;
    EdgeId gate = -1;
    std::optional<Cost> inner; // max cost from slice vertex to anchor; nullopt = singleton
};

// Per-child variable lookup: arc indices by split, splits sorted ascending.
struct ChildVars {
    int child = -1;
    Vertex anchor = -1;
    std::vector<int> splits;
    std::vector<int> left_arc;  // parallel to splits
    std::vector<int> right_arc;
};

class Solver {
public:
    Solver(const Instance& inst, Cost k, CactusStats* stats)
        : inst_(inst), k_(k), stats_(stats), bt_(build_block_tree(inst.graph)) {
        int nb = static_cast<int>(bt_.blocks.size());
        lambda_.resize(nb);
        region_.resize(nb);
        if (stats_) stats_->blocks = nb;
    }

    bool run(std::vector<EdgeId>& out_tree) {
        for (int bi : bt_.post_order)
            if (!process_block(bi)) return false;
        for (const Lambda& l : lambda_[bt_.root_block])
            if (l.defined) {
                out_tree = l.tree;
                return true;
            }
        return false;
    }

private:
    const Instance& inst_;
    Cost k_;
    CactusStats* stats_;
    BlockTree bt_;
    std::vector<std::vector<Lambda>> lambda_;
    std::vector<std::vector<char>> region_; // per block: vertex set of its subtree

    int n() const { return inst_.graph.num_vertices(); }

    // Splits lambda[child][split] at the child's anchor into its two slices
    // and appends them as arcs.
    void add_arcs_for_split(int child, int split, std::vector<Arc>& arcs) const {
        const Block& c = bt_.blocks[child];
        int p = static_cast<int>(c.verts.size());
        const std::vector<EdgeId>& tree = lambda_[child][split].tree;
        std::vector<std::vector<EdgeId>> adj(n());
        for (EdgeId e : tree) {
            adj[inst_.graph.edge(e).u].push_back(e);
            adj[inst_.graph.edge(e).v].push_back(e);
        }
        auto side_edges = [&](Vertex seed) {
            std::vector<EdgeId> out;
            std::vector<char> seen(n(), 0);
            seen[c.anchor] = 1; // never cross the anchor
            seen[seed] = 1;
            std::vector<Vertex> stack{seed};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (EdgeId e : adj[v]) {
                    Vertex w = inst_.graph.edge(e).other(v);
                    if (seen[w]) continue;
                    seen[w] = 1;
                    out.push_back(e);
                    stack.push_back(w);
                }
            }
            return out;
        };
        auto make = [&](bool left) {
            Arc a;
            a.child = child;
            a.anchor = c.anchor;
            a.split = split;
            a.left = left;
            bool singleton = left ? split == 0 : split == p - 1;
            if (!singleton) {
                a.gate = left ? c.edges[0] : c.edges[p - 1];
                Vertex seed = left ? c.verts[1] : c.verts[p - 1];
                a.edges = side_edges(seed);
                a.edges.push_back(a.gate);
                SpanningForest sf(inst_);
                for (EdgeId e : a.edges) sf.add_edge(e);
                a.inner = sf.eccentricity(c.anchor);
            }
            arcs.push_back(std::move(a));
        };
        make(true);
        make(false);
    }

    static Cost max_over(const std::vector<std::optional<Cost>>& dist,
                         const std::vector<char>& mask) {
        Cost m = 0;
        for (size_t v = 0; v < mask.size(); ++v)
            if (mask[v] && dist[v]) m = std::max(m, *dist[v]);
        return m;
    }

    bool process_block(int bi) {
        const Block& b = bt_.blocks[bi];
        int p = static_cast<int>(b.verts.size());

        region_[bi].assign(n(), 0);
        for (Vertex v : b.verts) region_[bi][v] = 1;
        for (int c : b.children)
            for (int v = 0; v < n(); ++v)
                if (region_[c][v]) region_[bi][v] = 1;

        std::vector<int> edge_children, cycle_children;
        for (int c : b.children)
            (bt_.blocks[c].is_cycle ? cycle_children : edge_children).push_back(c);

        // Arcs and per-child variable tables, shared by every omitted edge.
        std::vector<Arc> arcs;
        std::vector<ChildVars> cvars;
        for (int c : cycle_children) {
            ChildVars cv;
            cv.child = c;
            cv.anchor = bt_.blocks[c].anchor;
            int cp = static_cast<int>(bt_.blocks[c].verts.size());
            for (int s = 0; s < cp; ++s) {
                if (!lambda_[c][s].defined) continue;
                cv.splits.push_back(s);
                cv.left_arc.push_back(static_cast<int>(arcs.size()));
                cv.right_arc.push_back(static_cast<int>(arcs.size()) + 1);
                add_arcs_for_split(c, s, arcs);
            }
            if (cv.splits.empty())
                throw Error("internal: child block left no usable partial solution");
            cvars.push_back(std::move(cv));
        }

        // Coverage chains: a bigger slice forces every nested smaller slice of
        // the same child and side.
        std::vector<std::pair<Lit, Lit>> phi0;
        for (const ChildVars& cv : cvars)
            for (size_t si = 0; si + 1 < cv.splits.size(); ++si) {
                phi0.push_back({TwoSat::neg(cv.left_arc[si + 1]), TwoSat::pos(cv.left_arc[si])});
                phi0.push_back({TwoSat::neg(cv.right_arc[si]), TwoSat::pos(cv.right_arc[si + 1])});
            }

        // Every middle vertex of a cycle child is covered by exactly one side:
        // the nearest defined slice at or beyond it on either side.
        std::vector<std::pair<Lit, Lit>> phi1;
        for (const ChildVars& cv : cvars) {
            int cp = static_cast<int>(bt_.blocks[cv.child].verts.size());
            for (int m = 1; m < cp; ++m) {
                int astar = -1, bstar = -1;
                for (size_t si = 0; si < cv.splits.size(); ++si) {
                    if (cv.splits[si] >= m && astar == -1) astar = static_cast<int>(si);
                    if (cv.splits[si] <= m - 1) bstar = static_cast<int>(si);
                }
                if (astar != -1 && bstar != -1) {
                    Lit l = TwoSat::pos(cv.left_arc[astar]);
                    Lit r = TwoSat::pos(cv.right_arc[bstar]);
                    phi1.push_back({l, r});
                    phi1.push_back({TwoSat::negate(l), TwoSat::negate(r)});
                } else if (astar != -1) {
                    Lit l = TwoSat::pos(cv.left_arc[astar]);
                    phi1.push_back({l, l});
                } else if (bstar != -1) {
                    Lit r = TwoSat::pos(cv.right_arc[bstar]);
                    phi1.push_back({r, r});
                }
            }
        }

        std::vector<int> cycle_pos(n(), -1);
        for (int idx = 0; idx < p; ++idx) cycle_pos[b.verts[idx]] = idx;
        std::vector<std::vector<int>> children_at(n());
        for (int c : b.children) children_at[bt_.blocks[c].anchor].push_back(c);

        int omit_count = b.is_cycle ? p : 1;
        bool any_defined = false;
        lambda_[bi].assign(omit_count, Lambda{});

        for (int t = 0; t < omit_count; ++t) {
            EdgeId omitted = b.is_cycle ? b.edges[t] : b.edges[0];
            CactusLambdaTrace tr;
            tr.block = bi;
            tr.edge = omitted;
            tr.arcs = static_cast<int>(arcs.size());
            tr.phi0 = static_cast<int>(phi0.size());
            tr.phi1 = static_cast<int>(phi1.size());

            std::vector<EdgeId> base;
            if (b.is_cycle) {
                for (int s = 0; s < p; ++s)
                    if (s != t) base.push_back(b.edges[s]);
            } else {
                base.push_back(b.edges[0]);
            }
            for (int c : edge_children)
                base.insert(base.end(), lambda_[c][0].tree.begin(), lambda_[c][0].tree.end());

            SpanningForest bf(inst_);
            for (EdgeId e : base) bf.add_edge(e);
            Cost dmT = bf.reload_diameter();
            auto base_dist = bf.distances_from(b.anchor);

            // Side vertex sets: for a cycle split at t, X holds middles 1..t
            // with everything hanging there, Y the rest; an edge block is all X.
            std::vector<char> side_x(n(), 0), side_y(n(), 0);
            if (b.is_cycle) {
                side_x[b.anchor] = 1;
                side_y[b.anchor] = 1;
                for (int m = 1; m < p; ++m) {
                    auto& mask = m <= t ? side_x : side_y;
                    mask[b.verts[m]] = 1;
                    for (int c : children_at[b.verts[m]])
                        for (int v = 0; v < n(); ++v)
                            if (region_[c][v]) mask[v] = 1;
                }
            } else {
                side_x = region_[bi];
            }
            Cost bx = max_over(base_dist, side_x);
            Cost by = max_over(base_dist, side_y);

            // Per-arc screening data against its own side budget.
            std::vector<Cost> arc_dm(arcs.size(), 0), arc_sv(arcs.size(), 0);
            std::vector<char> arc_on_x(arcs.size(), 1);
            for (size_t ai = 0; ai < arcs.size(); ++ai) {
                if (b.is_cycle) arc_on_x[ai] = cycle_pos[arcs[ai].anchor] <= t;
                SpanningForest af = bf;
                for (EdgeId e : arcs[ai].edges) af.add_edge(e);
                arc_dm[ai] = af.reload_diameter();
                arc_sv[ai] = max_over(af.distances_from(b.anchor), arc_on_x[ai] ? side_x : side_y);
            }

            // Pairwise exclusions: two slices whose combined tree exceeds the
            // diameter budget cannot both be picked. The farthest pair of
            // vertices across two slices leaves through the gates, so the
            // union's only new paths cost inner + walk-over-base + inner.
            std::vector<std::pair<Lit, Lit>> phi2;
            for (size_t a1 = 0; a1 < arcs.size(); ++a1) {
                if (arc_dm[a1] > k_ || arc_sv[a1] > k_) continue;
                if (!arcs[a1].inner) continue;
                for (size_t a2 = a1 + 1; a2 < arcs.size(); ++a2) {
                    if (arc_dm[a2] > k_ || arc_sv[a2] > k_) continue;
                    if (!arcs[a2].inner) continue;
                    const Arc* l = &arcs[a1];
                    const Arc* r = &arcs[a2];
                    if (l->child == r->child) {
                        if (l->left == r->left) continue; // nested same side
                        if (r->left) std::swap(l, r);
                        if (l->split > r->split) continue; // excluded by coverage clauses
                    }
                    Cost cross;
                    if (l->anchor == r->anchor) {
                        cross = checked_add(checked_add(*l->inner, *r->inner),
                                            inst_.reload(l->gate, r->gate));
                    } else {
                        auto walk = bf.path_edges(l->anchor, r->anchor);
                        if (!walk) throw Error("internal: child anchors not connected in base tree");
                        std::vector<EdgeId> full;
                        full.push_back(l->gate);
                        full.insert(full.end(), walk->begin(), walk->end());
                        full.push_back(r->gate);
                        cross = checked_add(checked_add(*l->inner, *r->inner),
                                            path_reload_cost(inst_, full));
                    }
                    if (cross > k_)
                        phi2.push_back({TwoSat::neg(static_cast<int>(a1)),
                                        TwoSat::neg(static_cast<int>(a2))});
                }
            }
            tr.phi2 = static_cast<int>(phi2.size());

            auto probe = [&](Cost i, Cost j) -> std::optional<std::vector<bool>> {
                if (dmT > k_ || bx > i || by > j) return std::nullopt;
                TwoSat sat(static_cast<int>(arcs.size()));
                for (auto [x, y] : phi0) sat.add_clause(x, y);
                for (auto [x, y] : phi1) sat.add_clause(x, y);
                for (auto [x, y] : phi2) sat.add_clause(x, y);
                for (size_t ai = 0; ai < arcs.size(); ++ai)
                    if (arc_dm[ai] > k_ || arc_sv[ai] > (arc_on_x[ai] ? i : j))
                        sat.add_unit(TwoSat::neg(static_cast<int>(ai)));
                if (stats_) ++stats_->sat_probes;
                return sat.solve();
            };

            if (!probe(k_, k_)) {
                if (stats_) stats_->trace.push_back(tr);
                continue;
            }

            Cost lo = bx, hi = k_;
            while (lo < hi) {
                Cost mid = lo + (hi - lo) / 2;
                if (probe(mid, k_))
                    hi = mid;
                else
                    lo = mid + 1;
            }
            Cost i0 = lo;

            bool any_on_y = false;
            for (size_t ai = 0; ai < arcs.size(); ++ai)
                if (!arc_on_x[ai]) any_on_y = true;
            Cost j0 = by;
            if (any_on_y || by > 0) {
                Cost jlo = by, jhi = k_;
                while (jlo < jhi) {
                    Cost mid = jlo + (jhi - jlo) / 2;
                    if (probe(i0, mid))
                        jhi = mid;
                    else
                        jlo = mid + 1;
                }
                j0 = jlo;
            }

            auto model = probe(i0, j0);
            if (!model) throw Error("internal: optimum probe lost satisfiability");

            // Chosen split per child: the widest left slice that is selected,
            // or everything on the right when no nonsingleton left slice is.
            std::vector<EdgeId> tree = base;
            for (const ChildVars& cv : cvars) {
                int chosen = -1;
                for (size_t si = 0; si < cv.splits.size(); ++si)
                    if (cv.splits[si] >= 1 && (*model)[cv.left_arc[si]]) chosen = cv.splits[si];
                if (chosen == -1) {
                    if (cv.splits.front() != 0)
                        throw Error("internal: no usable split for a child");
                    chosen = 0;
                }
                const auto& ct = lambda_[cv.child][chosen].tree;
                tree.insert(tree.end(), ct.begin(), ct.end());
            }

            // The assembled tree must stand on its own merits.
            SpanningForest tf(inst_);
            for (EdgeId e : tree) tf.add_edge(e);
            int region_size = 0;
            for (int v = 0; v < n(); ++v)
                if (region_[bi][v]) ++region_size;
            for (int v = 0; v < n(); ++v)
                if (region_[bi][v] && !tf.same_component(b.anchor, v))
                    throw Error("internal: assembled block tree does not span its region");
            if (static_cast<int>(tree.size()) != region_size - 1)
                throw Error("internal: assembled block tree has wrong edge count");
            if (tf.reload_diameter() > k_)
                throw Error("internal: assembled block tree exceeds the diameter budget");
            auto final_dist = tf.distances_from(b.anchor);
            if (max_over(final_dist, side_x) > i0 || max_over(final_dist, side_y) > j0)
                throw Error("internal: assembled block tree exceeds its side budgets");

            Lambda& l = lambda_[bi][t];
            l.defined = true;
            l.tree = std::move(tree);
            l.i0 = i0;
            l.j0 = j0;
            any_defined = true;
            tr.defined = true;
            tr.i0 = i0;
            tr.j0 = j0;
            if (stats_) stats_->trace.push_back(tr);
        }
        return any_defined;
    }
};

} // namespace

CactusDecision cactus_decision(const Instance& inst, Cost k, CactusStats* stats) {
    if (!inst.graph.is_connected()) throw PreconditionError("graph is not connected");
    if (!inst.graph.is_cactus()) throw NotACactusError("graph is not a cactus");
    if (inst.graph.num_vertices() <= 1) return {true, {}};
    Solver s(inst, k, stats);
    CactusDecision d;
    d.yes = s.run(d.tree);
    if (!d.yes) d.tree.clear();
    return d;
}

CactusResult cactus_minimize(const Instance& inst, CactusStats* stats) {
    if (!inst.graph.is_connected()) return {};
    int nv = inst.graph.num_vertices();
    if (nv <= 1) return {Cost{0}, {}};

    auto d0 = cactus_decision(inst, 0, stats);
    if (d0.yes) return {Cost{0}, std::move(d0.tree)};

    Cost maxc = inst.costs.max_cost();
    unsigned __int128 cap = static_cast<unsigned __int128>(nv - 1) * maxc;
    Cost kmax = cap > static_cast<unsigned __int128>(kMaxCost) ? kMaxCost : static_cast<Cost>(cap);
    if (kmax == 0) throw Error("internal: zero cost ceiling but k=0 was refused");

    Cost lo = 1, hi = 1;
    CactusDecision best;
    while (true) {
        best = cactus_decision(inst, hi, stats);
        if (best.yes) break;
        if (hi >= kmax) throw Error("internal: no spanning tree within the cost ceiling");
        lo = hi + 1;
        hi = hi > kmax / 2 ? kmax : hi * 2;
    }
    while (lo < hi) {
        Cost mid = lo + (hi - lo) / 2;
        auto d = cactus_decision(inst, mid, stats);
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
