#include "rct/twosat.hpp"

#include <algorithm>

#include "rct/types.hpp"

namespace rct {

TwoSat::TwoSat(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw InvalidArgument("negative variable count");
}

int TwoSat::add_var() { return num_vars_++; }

void TwoSat::check_lit(Lit l) const {
    if (l < 0 || l >= 2 * num_vars_) throw InvalidArgument("literal out of range");
}

void TwoSat::add_clause(Lit a, Lit b) {
    check_lit(a);
    check_lit(b);
    clauses_.push_back({a, b});
}

void TwoSat::add_unit(Lit a) { add_clause(a, a); }

std::optional<std::vector<bool>> TwoSat::solve(TwoSatStats* stats) const {
    int nodes = 2 * num_vars_;
    std::uint64_t ops = 0;

    // Implication graph: clause (a or b) gives ~a -> b and ~b -> a.
    std::vector<int> head(nodes + 1, 0);
    std::vector<int> arcs(2 * clauses_.size());
    for (const auto& [a, b] : clauses_) {
        ++head[negate(a)];
        ++head[negate(b)];
    }
    int acc = 0;
    for (int v = 0; v < nodes; ++v) {
        int c = head[v];
        head[v] = acc;
        acc += c;
    }
    head[nodes] = acc;
    std::vector<int> fill(head.begin(), head.end());
    for (const auto& [a, b] : clauses_) {
        arcs[fill[negate(a)]++] = b;
        arcs[fill[negate(b)]++] = a;
    }

    // Iterative Tarjan. Components are numbered in completion order, so
    // sinks of the condensation get the smaller ids.
    std::vector<int> comp(nodes, -1), low(nodes, 0), index(nodes, -1);
    std::vector<int> stack, frame_v, frame_edge;
    std::vector<char> on_stack(nodes, 0);
    int next_index = 0, next_comp = 0;

    for (int s = 0; s < nodes; ++s) {
        if (index[s] != -1) continue;
        frame_v.push_back(s);
        frame_edge.push_back(head[s]);
        index[s] = low[s] = next_index++;
        stack.push_back(s);
        on_stack[s] = 1;
        ++ops;
        while (!frame_v.empty()) {
            int v = frame_v.back();
            int& e = frame_edge.back();
            if (e < head[v + 1]) {
                int w = arcs[e++];
                ++ops;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frame_v.push_back(w);
                    frame_edge.push_back(head[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                frame_v.pop_back();
                frame_edge.pop_back();
                if (low[v] == index[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                if (!frame_v.empty()) {
                    int p = frame_v.back();
                    low[p] = std::min(low[p], low[v]);
                }
            }
        }
    }

    if (stats) stats->ops = ops;

    for (int v = 0; v < num_vars_; ++v)
        if (comp[pos(v)] == comp[neg(v)]) return std::nullopt;

    std::vector<bool> assign(num_vars_);
    for (int v = 0; v < num_vars_; ++v) assign[v] = comp[pos(v)] < comp[neg(v)];

    for (const auto& [a, b] : clauses_) {
        bool va = (a & 1) ? !assign[a >> 1] : assign[a >> 1];
        bool vb = (b & 1) ? !assign[b >> 1] : assign[b >> 1];
        if (!va && !vb) throw Error("internal: produced assignment violates a clause");
    }
    return assign;
}

} // namespace rct
