#include "rct/oracle.hpp"

#include <algorithm>

namespace rct {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

struct Enumerator {
    const Instance& inst;
    const BruteOptions& opts;
    int n;
    int m;
    std::vector<char> chosen;
    std::uint64_t ops = 0;
    BruteResult result;

    Enumerator(const Instance& i, const BruteOptions& o)
        : inst(i), opts(o), n(i.graph.num_vertices()), m(i.graph.num_edges()),
          chosen(i.graph.num_edges(), 0) {}

    // Included edges plus all undecided edges from `next` onward still
    // connect every vertex.
    bool can_still_span(int next, const Dsu& included) const {
        Dsu d = included;
        int comps = 0;
        for (int v = 0; v < n; ++v)
            if (d.find(v) == v) ++comps;
        for (int e = next; e < m && comps > 1; ++e) {
            const Edge& ed = inst.graph.edge(e);
            if (d.unite(ed.u, ed.v)) --comps;
        }
        return comps <= 1;
    }

    void evaluate() {
        if (opts.max_trees && result.trees_examined >= opts.max_trees)
            throw ResourceLimitError("spanning tree enumeration exceeded its tree budget");
        ++result.trees_examined;
        SpanningForest t(inst);
        for (int e = 0; e < m; ++e)
            if (chosen[e]) t.add_edge(e);
        Cost d = t.reload_diameter();
        if (!result.best || d < *result.best) {
            result.best = d;
            result.tree.clear();
            for (int e = 0; e < m; ++e)
                if (chosen[e]) result.tree.push_back(e);
        }
    }

    void recurse(int next, int taken, Dsu dsu) {
        if (++ops > opts.max_operations)
            throw ResourceLimitError("spanning tree enumeration exceeded its operation budget");
        if (taken == n - 1) {
            evaluate();
            return;
        }
        if (next == m) return;
        if (!can_still_span(next, dsu)) return;

        const Edge& ed = inst.graph.edge(next);
        Dsu with = dsu;
        if (with.unite(ed.u, ed.v)) {
            chosen[next] = 1;
            recurse(next + 1, taken + 1, std::move(with));
            chosen[next] = 0;
        }
        recurse(next + 1, taken, std::move(dsu));
    }
};

} // namespace

BruteResult brute_force_min_diameter(const Instance& inst, const BruteOptions& opts) {
    if (!inst.graph.is_connected()) return {};
    Enumerator en(inst, opts);
    if (inst.graph.num_vertices() <= 1) {
        en.result.best = 0;
        en.result.trees_examined = 1;
        return en.result;
    }
    en.recurse(0, 0, Dsu(inst.graph.num_vertices()));
    return en.result;
}

} // namespace rct
