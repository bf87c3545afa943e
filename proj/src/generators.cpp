#include "rct/generators.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

namespace rct {

namespace {

struct Line {
    int number;
    std::string text;
};

// Lines starting with 'c' or '#' are comments; blank lines are skipped.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (raw[start] == '#' || raw[start] == 'c') continue;
        out.push_back({number, raw});
    }
    return out;
}

template <typename T>
T to_number(int line, const std::string& tok, const char* what) {
    T v{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line, ParseErrorKind::Format,
                         std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Flattens the lines after the header into (line, token) pairs.
std::vector<std::pair<int, std::string>> tokens_from(const std::vector<Line>& lines, size_t from) {
    std::vector<std::pair<int, std::string>> out;
    for (size_t i = from; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        std::string tok;
        while (in >> tok) out.push_back({lines[i].number, tok});
    }
    return out;
}

int last_line(const std::vector<Line>& lines) {
    return lines.empty() ? 1 : lines.back().number;
}

void check_formula_shape(const CnfFormula& f) {
    if (f.num_vars < 0) throw InvalidArgument("negative variable count");
    for (size_t j = 0; j < f.clauses.size(); ++j)
        for (int lit : f.clauses[j]) {
            if (lit == 0 || lit == std::numeric_limits<int>::min())
                throw InvalidArgument("clause " + std::to_string(j + 1) + " holds literal " +
                                      std::to_string(lit));
            if (std::abs(lit) > f.num_vars)
                throw InvalidArgument("clause " + std::to_string(j + 1) +
                                      " references variable " + std::to_string(std::abs(lit)) +
                                      " beyond the declared count " + std::to_string(f.num_vars));
        }
}

void require_clause_sizes(const CnfFormula& f, size_t lo, size_t hi) {
    for (size_t j = 0; j < f.clauses.size(); ++j) {
        size_t sz = f.clauses[j].size();
        if (sz < lo || sz > hi)
            throw InvalidArgument("clause " + std::to_string(j + 1) + " has " +
                                  std::to_string(sz) + " literals; supported sizes are " +
                                  std::to_string(lo) + ".." + std::to_string(hi));
    }
}

} // namespace

CnfFormula parse_dimacs_cnf(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, ParseErrorKind::Format, "expected header 'p cnf <vars> <clauses>'");

    std::istringstream hin(lines[0].text);
    std::string p, fmt;
    hin >> p >> fmt;
    if (p != "p" || fmt != "cnf")
        throw ParseError(lines[0].number, ParseErrorKind::Format,
                         "expected header 'p cnf <vars> <clauses>'");
    std::string tok;
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected variable count");
    int num_vars = to_number<int>(lines[0].number, tok, "variable count");
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected clause count");
    int num_clauses = to_number<int>(lines[0].number, tok, "clause count");
    if (hin >> tok)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "trailing token '" + tok + "'");
    if (num_vars < 0 || num_clauses < 0)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "negative count in header");

    CnfFormula f;
    f.num_vars = num_vars;
    std::vector<int> current;
    int current_line = lines[0].number;
    for (auto& [line, t] : tokens_from(lines, 1)) {
        int lit = to_number<int>(line, t, "literal");
        current_line = line;
        if (lit == 0) {
            if (static_cast<int>(f.clauses.size()) == num_clauses)
                throw ParseError(line, ParseErrorKind::Format,
                                 "more clauses than the header declares");
            f.clauses.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (lit == std::numeric_limits<int>::min() || std::abs(lit) > num_vars)
            throw ParseError(line, ParseErrorKind::Format,
                             "literal " + t + " out of range for " + std::to_string(num_vars) +
                                 " variables");
        current.push_back(lit);
    }
    if (!current.empty())
        throw ParseError(current_line, ParseErrorKind::Format, "unterminated clause");
    if (static_cast<int>(f.clauses.size()) != num_clauses)
        throw ParseError(last_line(lines), ParseErrorKind::Format,
                         "expected " + std::to_string(num_clauses) + " clauses, found " +
                             std::to_string(f.clauses.size()));
    return f;
}

CnfFormula read_dimacs_cnf_file(const std::string& path) { return parse_dimacs_cnf(slurp(path)); }

PartitionInstance parse_partition(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, ParseErrorKind::Format, "expected header 'p part <n>'");
    std::istringstream hin(lines[0].text);
    std::string p, fmt, tok;
    hin >> p >> fmt;
    if (p != "p" || fmt != "part")
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected header 'p part <n>'");
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected item count");
    long long n = to_number<long long>(lines[0].number, tok, "item count");
    if (hin >> tok)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "trailing token '" + tok + "'");
    if (n < 1)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "need at least one item");

    PartitionInstance out;
    for (auto& [line, t] : tokens_from(lines, 1)) {
        if (static_cast<long long>(out.items.size()) == n)
            throw ParseError(line, ParseErrorKind::Format, "trailing token '" + t + "'");
        Cost a = to_number<Cost>(line, t, "item size");
        if (a == 0) throw ParseError(line, ParseErrorKind::Format, "item sizes must be positive");
        out.items.push_back(a);
    }
    if (static_cast<long long>(out.items.size()) != n)
        throw ParseError(last_line(lines), ParseErrorKind::Format,
                         "expected " + std::to_string(n) + " items, found " +
                             std::to_string(out.items.size()));
    return out;
}

PartitionInstance read_partition_file(const std::string& path) {
    return parse_partition(slurp(path));
}

BinPackingInstance parse_bin_packing(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, ParseErrorKind::Format,
                         "expected header 'p ubp <n> <capacity> <bins>'");
    std::istringstream hin(lines[0].text);
    std::string p, fmt, tok;
    hin >> p >> fmt;
    if (p != "p" || fmt != "ubp")
        throw ParseError(lines[0].number, ParseErrorKind::Format,
                         "expected header 'p ubp <n> <capacity> <bins>'");
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected item count");
    long long n = to_number<long long>(lines[0].number, tok, "item count");
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected capacity");
    Cost capacity = to_number<Cost>(lines[0].number, tok, "capacity");
    if (!(hin >> tok))
        throw ParseError(lines[0].number, ParseErrorKind::Format, "expected bin count");
    int bins = to_number<int>(lines[0].number, tok, "bin count");
    if (hin >> tok)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "trailing token '" + tok + "'");
    if (n < 0)
        throw ParseError(lines[0].number, ParseErrorKind::Format, "negative item count");

    BinPackingInstance out;
    out.capacity = capacity;
    out.bins = bins;
    for (auto& [line, t] : tokens_from(lines, 1)) {
        if (static_cast<long long>(out.items.size()) == n)
            throw ParseError(line, ParseErrorKind::Format, "trailing token '" + t + "'");
        Cost a = to_number<Cost>(line, t, "item size");
        if (a == 0) throw ParseError(line, ParseErrorKind::Format, "item sizes must be positive");
        out.items.push_back(a);
    }
    if (static_cast<long long>(out.items.size()) != n)
        throw ParseError(last_line(lines), ParseErrorKind::Format,
                         "expected " + std::to_string(n) + " items, found " +
                             std::to_string(out.items.size()));
    return out;
}

BinPackingInstance read_bin_packing_file(const std::string& path) {
    return parse_bin_packing(slurp(path));
}

Instance gen_outerplanar_from_3sat(const CnfFormula& f) {
    check_formula_shape(f);
    int m = static_cast<int>(f.clauses.size());
    for (int j = 0; j < m; ++j) {
        const auto& cl = f.clauses[j];
        if (cl.size() != 3)
            throw InvalidArgument("clause " + std::to_string(j + 1) + " has " +
                                  std::to_string(cl.size()) +
                                  " literals; the construction needs exactly three");
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (cl[a] == -cl[b])
                    throw InvalidArgument("clause " + std::to_string(j + 1) +
                                          " contains a literal and its negation");
    }

    // Clause j occupies vertices 1+3j..3+3j and colors 5j..5j+4, hub edges
    // first. hub_literal[color] records the literal behind a hub edge.
    ColoredGraph g(1 + 3 * m);
    std::vector<int> hub_literal(5 * m, 0);
    for (int j = 0; j < m; ++j) {
        Vertex v1 = 1 + 3 * j, v2 = v1 + 1, v3 = v1 + 2;
        for (int s = 0; s < 3; ++s) {
            Color c = g.add_edge(0, v1 + s, 5 * j + s);
            hub_literal[c] = f.clauses[j][s];
        }
        g.add_edge(v1, v2, 5 * j + 3);
        g.add_edge(v2, v3, 5 * j + 4);
    }

    ReloadCostTable costs(5 * m);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b) {
                Color ca = g.edge(inc[a]).color;
                Color cb = g.edge(inc[b]).color;
                if (v == 0)
                    costs.set(ca, cb, hub_literal[ca] == -hub_literal[cb] ? 10 : 5);
                else
                    costs.set(ca, cb, 1);
            }
    }

    Instance inst(std::move(g), std::move(costs));
    inst.budget = 9;
    return inst;
}

CnfFormula normalize_3sat_three_occurrences(const CnfFormula& f) {
    check_formula_shape(f);
    require_clause_sizes(f, 2, 3);
    int nv = f.num_vars;
    int m = static_cast<int>(f.clauses.size());

    std::vector<int> pos(nv, 0), neg(nv, 0);
    std::vector<std::vector<int>> occ(nv); // clause indices, duplicates possible
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) {
            int v = std::abs(lit) - 1;
            (lit > 0 ? pos : neg)[v] += 1;
            occ[v].push_back(j);
        }
    for (int v = 0; v < nv; ++v)
        if (pos[v] + neg[v] > 3)
            throw InvalidArgument("variable " + std::to_string(v + 1) + " occurs " +
                                  std::to_string(pos[v] + neg[v]) +
                                  " times; at most three occurrences are supported");

    // A variable seen with one polarity only can be assigned outright; its
    // clauses vanish, which may strand further variables, so iterate to a
    // fixpoint.
    std::vector<char> var_alive(nv, 1), clause_alive(m, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < nv; ++v) {
            if (!var_alive[v] || (pos[v] > 0 && neg[v] > 0)) continue;
            var_alive[v] = 0;
            changed = true;
            for (int j : occ[v]) {
                if (!clause_alive[j]) continue;
                clause_alive[j] = 0;
                for (int lit : f.clauses[j]) (lit > 0 ? pos : neg)[std::abs(lit) - 1] -= 1;
            }
        }
    }

    std::vector<int> renumber(nv, 0);
    CnfFormula out;
    for (int v = 0; v < nv; ++v)
        if (var_alive[v]) renumber[v] = ++out.num_vars;
    for (int j = 0; j < m; ++j) {
        if (!clause_alive[j]) continue;
        std::vector<int> cl;
        for (int lit : f.clauses[j]) {
            int v = renumber[std::abs(lit) - 1];
            cl.push_back(lit > 0 ? v : -v);
        }
        out.clauses.push_back(std::move(cl));
    }
    // Survivors occur both ways, so twice or three times. Pad the former.
    for (int v = 0; v < nv; ++v) {
        if (!var_alive[v] || pos[v] + neg[v] == 3) continue;
        int x = renumber[v];
        int y = ++out.num_vars;
        out.clauses.push_back({x, y});
        out.clauses.push_back({y, -y});
    }
    return out;
}

Instance gen_degree3_from_3sat(const CnfFormula& f) {
    check_formula_shape(f);
    require_clause_sizes(f, 2, 3);
    int nv = f.num_vars;
    int m = static_cast<int>(f.clauses.size());

    // Occurrence slots per variable in scan order.
    struct Slot {
        int clause;
        bool positive;
    };
    std::vector<std::vector<Slot>> occ(nv);
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) occ[std::abs(lit) - 1].push_back({j, lit > 0});
    for (int v = 0; v < nv; ++v) {
        int p = 0;
        for (const Slot& s : occ[v]) p += s.positive ? 1 : 0;
        int total = static_cast<int>(occ[v].size());
        if (total != 3 || p == 0 || p == total)
            throw InvalidArgument("variable " + std::to_string(v + 1) + " occurs " +
                                  std::to_string(total) + " times with " + std::to_string(p) +
                                  " positive; the construction needs exactly three occurrences "
                                  "with both polarities");
    }

    // Variable gadget i: u=5i, w=5i+1, a=5i+2, b=5i+3, d=5i+4 arranged as
    // the 4-cycle w-a-b-d-w plus the stem u-w; clause vertex j sits at
    // 5*nv+j. Colors: 0={a,b}, 1={b,d}, 2=everything touching u or w,
    // 3..5 positive clause edges, 6..8 negative clause edges.
    ColoredGraph g(5 * nv + m);
    for (int i = 0; i < nv; ++i) {
        Vertex u = 5 * i, w = u + 1, a = u + 2, b = u + 3, d = u + 4;
        g.add_edge(u, w, 2);
        g.add_edge(w, a, 2);
        g.add_edge(a, b, 0);
        g.add_edge(b, d, 1);
        g.add_edge(d, w, 2);
        if (i + 1 < nv) g.add_edge(u, 5 * (i + 1), 2);
    }

    // First positive occurrence hangs off a, first negative off d, the
    // remaining one off b.
    std::vector<std::vector<std::pair<Vertex, bool>>> clause_slots(m);
    for (int v = 0; v < nv; ++v) {
        int firstpos = -1, firstneg = -1;
        for (int s = 0; s < 3; ++s) {
            if (occ[v][s].positive && firstpos < 0) firstpos = s;
            if (!occ[v][s].positive && firstneg < 0) firstneg = s;
        }
        for (int s = 0; s < 3; ++s) {
            Vertex at = 5 * v + 3; // b
            if (s == firstpos) at = 5 * v + 2;
            else if (s == firstneg) at = 5 * v + 4;
            clause_slots[occ[v][s].clause].push_back({at, occ[v][s].positive});
        }
    }
    for (int j = 0; j < m; ++j) {
        Color nextpos = 3, nextneg = 6;
        for (auto [at, positive] : clause_slots[j])
            g.add_edge(at, 5 * nv + j, positive ? nextpos++ : nextneg++);
    }

    ReloadCostTable costs(9);
    costs.set(0, 1, 1);
    for (Color c = 3; c <= 5; ++c) costs.set(0, c, 1);
    for (Color c = 6; c <= 8; ++c) costs.set(1, c, 1);
    for (Color a = 3; a <= 8; ++a)
        for (Color b = a + 1; b <= 8; ++b) costs.set(a, b, 1);

    Instance inst(std::move(g), std::move(costs));
    inst.budget = 0;
    return inst;
}

Instance gen_planar_from_partition(const PartitionInstance& in) {
    int n = static_cast<int>(in.items.size());
    if (n < 1) throw InvalidArgument("need at least one item");
    Cost total = 0;
    for (Cost a : in.items) {
        if (a == 0) throw InvalidArgument("item sizes must be positive");
        total = checked_add(total, a);
    }
    Cost sentinel = checked_add(total, 1);

    // Copy c in {0,1} occupies vertices c*(6n+1)..: root, then per item
    // u,u',m,m',d,d'. Edge kinds drive the cost rules below.
    enum Kind { kRoot, kChain, kCross, kMid, kIntoMid, kOutOfMid, kRail };
    int half = 6 * n + 1;
    ColoredGraph g(2 * half);
    std::vector<Kind> kind;
    std::vector<int> item;
    auto add = [&](Vertex a, Vertex b, Kind k, int it) {
        g.add_edge(a, b, static_cast<Color>(kind.size()));
        kind.push_back(k);
        item.push_back(it);
    };
    for (int c = 0; c < 2; ++c) {
        int base = c * half;
        auto u = [&](int i) { return base + 1 + 6 * i; };
        auto up = [&](int i) { return base + 2 + 6 * i; };
        auto mid = [&](int i) { return base + 3 + 6 * i; };
        auto midp = [&](int i) { return base + 4 + 6 * i; };
        auto d = [&](int i) { return base + 5 + 6 * i; };
        auto dp = [&](int i) { return base + 6 + 6 * i; };
        add(base, u(0), kRoot, -1);
        add(base, d(0), kRoot, -1);
        for (int i = 0; i < n; ++i) {
            add(u(i), up(i), kRail, i);
            add(u(i), mid(i), kIntoMid, i);
            add(mid(i), midp(i), kMid, i);
            add(midp(i), up(i), kOutOfMid, i);
            add(mid(i), d(i), kIntoMid, i);
            add(midp(i), dp(i), kOutOfMid, i);
            add(d(i), dp(i), kRail, i);
        }
        for (int i = 0; i + 1 < n; ++i) {
            add(up(i), u(i + 1), kChain, i);
            add(dp(i), d(i + 1), kChain, i);
        }
    }
    add(0, half, kCross, -1);

    // Zero across chain, root and cross edges; the middle edge costs the
    // item against its two entry edges and nothing against its two exits;
    // every other incident pair gets the sentinel.
    ReloadCostTable costs(g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t a = 0; a < inc.size(); ++a)
            for (size_t b = a + 1; b < inc.size(); ++b) {
                Color ca = g.edge(inc[a]).color;
                Color cb = g.edge(inc[b]).color;
                Kind ka = kind[ca], kb = kind[cb];
                Cost value = sentinel;
                if (ka == kChain || kb == kChain || ka == kRoot || kb == kRoot ||
                    ka == kCross || kb == kCross) {
                    value = 0;
                } else if (ka == kMid || kb == kMid) {
                    Kind other = ka == kMid ? kb : ka;
                    value = other == kIntoMid ? in.items[item[ca]] : 0;
                }
                costs.set(ca, cb, value);
            }
    }

    Instance inst(std::move(g), std::move(costs));
    inst.budget = total;
    return inst;
}

Instance gen_from_unary_binpacking(const BinPackingInstance& in) {
    if (in.bins < 2) throw InvalidArgument("need at least two bins");
    for (Cost a : in.items)
        if (a == 0) throw InvalidArgument("item sizes must be positive");
    int n = static_cast<int>(in.items.size());
    int k = in.bins;
    Cost budget = checked_mul(in.capacity, 2);
    Cost sentinel = checked_add(budget, 1);

    // Copy c occupies vertices 1+c*n*(2k+1)..: item i holds v followed by
    // its k left ports and k right ports; lane j runs root, left(0,j),
    // right(0,j), left(1,j), ... Per (item, lane) the edges go in the
    // fixed order left port, right port, bypass.
    int per = n * (2 * k + 1);
    ColoredGraph g(1 + 2 * per);
    int next_color = 0;
    auto add = [&](Vertex a, Vertex b) { g.add_edge(a, b, next_color++); };
    for (int c = 0; c < 2; ++c) {
        int base = 1 + c * per;
        auto v = [&](int i) { return base + i * (2 * k + 1); };
        auto left = [&](int i, int j) { return v(i) + 1 + j; };
        auto right = [&](int i, int j) { return v(i) + 1 + k + j; };
        for (int j = 0; j < k; ++j) add(0, left(0, j));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) {
                add(v(i), left(i, j));
                add(v(i), right(i, j));
                add(left(i, j), right(i, j));
            }
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j < k; ++j) add(right(i, j), left(i + 1, j));
    }

    // At each item vertex the only cheap turn is between the two ports of
    // one lane; everything else there costs the sentinel. So does pairing
    // a port with its lane's bypass at the shared port vertex: without
    // that, hanging the item vertex off one port while the lane takes the
    // bypass would never be charged, and every instance would admit a
    // zero-diameter tree.
    ReloadCostTable costs(g.num_edges());
    int stride = 4 * n * k; // edges per copy
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) {
                Color pl = c * stride + k + 3 * (i * k + j);
                Color pr = pl + 1;
                Color bypass = pl + 2;
                costs.set(pl, pr, in.items[i]);
                costs.set(pl, bypass, sentinel);
                costs.set(pr, bypass, sentinel);
                for (int j2 = j + 1; j2 < k; ++j2) {
                    Color ql = c * stride + k + 3 * (i * k + j2);
                    costs.set(pl, ql, sentinel);
                    costs.set(pl, ql + 1, sentinel);
                    costs.set(pr, ql, sentinel);
                    costs.set(pr, ql + 1, sentinel);
                }
            }

    Instance inst(std::move(g), std::move(costs));
    inst.budget = budget;
    return inst;
}

ColoredGraph gen_random_cactus(int n, double cycle_prob, std::uint64_t seed, int num_colors) {
    if (n < 1) throw InvalidArgument("need at least one vertex");
    if (num_colors < 1) throw InvalidArgument("need at least one color");
    if (!(cycle_prob >= 0.0 && cycle_prob <= 1.0))
        throw InvalidArgument("cycle probability must lie in [0,1]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> col(0, num_colors - 1);
    ColoredGraph g(n);
    int built = 1;
    while (built < n) {
        int at = std::uniform_int_distribution<int>(0, built - 1)(rng);
        if (n - built >= 2 && coin(rng) < cycle_prob) {
            // A cycle through `at` and 2..4 fresh vertices; its edges are
            // new, so no edge ever sits on two cycles.
            int fresh = std::uniform_int_distribution<int>(2, std::min(4, n - built))(rng);
            Vertex prev = at;
            for (int t = 0; t < fresh; ++t) {
                g.add_edge(prev, built, col(rng));
                prev = built++;
            }
            g.add_edge(prev, at, col(rng));
        } else {
            g.add_edge(at, built++, col(rng));
        }
    }
    return g;
}

ReloadCostTable gen_random_costs(int num_colors, Cost max_cost, std::uint64_t seed) {
    if (num_colors < 0) throw InvalidArgument("negative color count");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Cost> dist(0, max_cost);
    ReloadCostTable table(num_colors);
    for (Color a = 0; a < num_colors; ++a)
        for (Color b = a + 1; b < num_colors; ++b) table.set(a, b, dist(rng));
    return table;
}

} // namespace rct
