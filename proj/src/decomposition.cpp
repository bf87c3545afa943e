#include "rct/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "rct/types.hpp"

namespace rct {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::optional<std::string> validate_decomposition(const ColoredGraph& g,
                                                  const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return "decomposition has no bags";

    for (int b = 0; b < nb; ++b) {
        const auto& bag = td.bags[b];
        if (!std::is_sorted(bag.begin(), bag.end())) return "bag " + std::to_string(b) + " is not sorted";
        if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return "bag " + std::to_string(b) + " repeats a vertex";
        for (Vertex v : bag) {
            if (v < 0 || v >= g.num_vertices())
                return "bag " + std::to_string(b) + " contains out-of-range vertex " + std::to_string(v);
        }
    }

    // Tree shape over bags.
    if (static_cast<int>(td.tree_edges.size()) != nb - 1)
        return "decomposition tree has " + std::to_string(td.tree_edges.size()) + " edges, expected " +
               std::to_string(nb - 1);
    std::vector<std::vector<int>> adj(nb);
    for (const auto& [a, b] : td.tree_edges) {
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            return "decomposition tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                   ") references a missing bag";
        if (a == b) return "decomposition tree edge loops at bag " + std::to_string(a);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    {
        std::vector<char> seen(nb, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++reached;
            for (int c : adj[b])
                if (!seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
        }
        if (reached != nb) return "decomposition tree is not connected";
    }

    // Axiom: every vertex appears in some bag.
    std::vector<char> covered(g.num_vertices(), 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) covered[v] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!covered[v]) return "vertex " + std::to_string(v) + " appears in no bag";

    // Axiom: every edge is inside some bag.
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        bool found = false;
        for (const auto& bag : td.bags) {
            if (std::binary_search(bag.begin(), bag.end(), ed.u) &&
                std::binary_search(bag.begin(), bag.end(), ed.v)) {
                found = true;
                break;
            }
        }
        if (!found)
            return "edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) + "} lies in no bag";
    }

    // Axiom: the bags containing any one vertex form a subtree.
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::vector<char> holds(nb, 0);
        int total = 0, start = -1;
        for (int b = 0; b < nb; ++b) {
            if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), v)) {
                holds[b] = 1;
                ++total;
                start = b;
            }
        }
        if (total <= 1) continue;
        std::vector<char> seen(nb, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int reached = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++reached;
            for (int c : adj[b])
                if (holds[c] && !seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
        }
        if (reached != total)
            return "bags containing vertex " + std::to_string(v) + " do not form a subtree";
    }

    return std::nullopt;
}

TreeDecomposition heuristic_decomposition(const ColoredGraph& g) {
    const int n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }

    std::vector<char> done(n, 0);
    std::vector<int> position(n, -1); // elimination index per vertex
    std::vector<std::vector<Vertex>> bags;
    bags.reserve(n);

    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long long best_fill = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (done[v]) continue;
            long long fill = 0;
            std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j)
                    if (!adj[nb[i]].count(nb[j])) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }

        std::vector<Vertex> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bags.push_back(std::move(bag));
        position[best] = step;

        std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (Vertex u : nb) adj[u].erase(best);
        adj[best].clear();
        done[best] = 1;
    }

    td.bags = std::move(bags);
    // Bag i hangs below the bag of its earliest-eliminated remaining neighbor.
    std::vector<Vertex> elim_order(n);
    for (Vertex v = 0; v < n; ++v) elim_order[position[v]] = v;
    for (int i = 0; i + 1 < n; ++i) {
        Vertex vi = elim_order[i];
        int attach = -1;
        for (Vertex u : td.bags[i]) {
            if (u == vi) continue;
            if (attach == -1 || position[u] < attach) attach = position[u];
        }
        if (attach == -1) attach = i + 1; // isolated remainder, chain along
        td.tree_edges.push_back({i, attach});
    }
    return td;
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int num_bags = 0, claimed_width_plus1 = 0, n = 0;
    TreeDecomposition td;
    std::vector<char> bag_seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == 'c' || tok[0] == '#') continue;

        if (tok == "s") {
            std::string td_tok;
            if (have_header) throw ParseError(lineno, ParseErrorKind::Format, "duplicate s td header");
            if (!(ls >> td_tok >> num_bags >> claimed_width_plus1 >> n) || td_tok != "td")
                throw ParseError(lineno, ParseErrorKind::Format, "malformed header, expected 's td <bags> <width+1> <n>'");
            if (num_bags < 0 || n < 0 || claimed_width_plus1 < 0)
                throw ParseError(lineno, ParseErrorKind::Format, "negative count in header");
            have_header = true;
            td.bags.assign(num_bags, {});
            bag_seen.assign(num_bags, 0);
            continue;
        }
        if (!have_header) throw ParseError(lineno, ParseErrorKind::Format, "content before s td header");

        if (tok == "b") {
            int id;
            if (!(ls >> id)) throw ParseError(lineno, ParseErrorKind::Format, "bag line without id");
            if (id < 1 || id > num_bags)
                throw ParseError(lineno, ParseErrorKind::Format, "bag id " + std::to_string(id) + " out of range");
            if (bag_seen[id - 1]) throw ParseError(lineno, ParseErrorKind::Format, "bag " + std::to_string(id) + " defined twice");
            bag_seen[id - 1] = 1;
            std::vector<Vertex> bag;
            long long v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw ParseError(lineno, ParseErrorKind::Format, "vertex " + std::to_string(v) + " out of range");
                bag.push_back(static_cast<Vertex>(v - 1));
            }
            if (!ls.eof()) throw ParseError(lineno, ParseErrorKind::Format, "trailing garbage on bag line");
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[id - 1] = std::move(bag);
            continue;
        }

        // Decomposition tree edge between two bag ids.
        int a, b;
        std::istringstream es(line);
        if (!(es >> a >> b)) throw ParseError(lineno, ParseErrorKind::Format, "expected bag edge '<a> <b>'");
        std::string rest;
        if (es >> rest) throw ParseError(lineno, ParseErrorKind::Format, "trailing garbage on edge line");
        if (a < 1 || a > num_bags || b < 1 || b > num_bags)
            throw ParseError(lineno, ParseErrorKind::Format, "bag edge endpoint out of range");
        td.tree_edges.push_back({a - 1, b - 1});
    }

    if (!have_header) throw ParseError(lineno, ParseErrorKind::Format, "missing s td header");
    for (int i = 0; i < num_bags; ++i)
        if (!bag_seen[i]) throw ParseError(lineno, ParseErrorKind::Format, "bag " + std::to_string(i + 1) + " never defined");
    if (td.width() + 1 != claimed_width_plus1)
        throw ParseError(lineno, ParseErrorKind::Format, "header claims width " + std::to_string(claimed_width_plus1 - 1) +
                                     " but bags have width " + std::to_string(td.width()));
    if (static_cast<int>(td.tree_edges.size()) != num_bags - 1)
        throw ParseError(lineno, ParseErrorKind::Format, "expected " + std::to_string(num_bags - 1) + " bag edges, got " +
                                     std::to_string(td.tree_edges.size()));
    return td;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td) {
    int n = 0;
    for (const auto& bag : td.bags)
        for (Vertex v : bag) n = std::max(n, v + 1);
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    for (const auto& [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

TreeDecomposition read_tree_decomposition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open decomposition file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tree_decomposition(buf.str());
}

void write_tree_decomposition_file(const TreeDecomposition& td, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open decomposition file for writing: " + path);
    out << serialize_tree_decomposition(td);
}

} // namespace rct
