#include "rct/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace rct {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (raw[start] == '#') continue;
        out.push_back({number, raw});
    }
    return out;
}

long long parse_int(const Line& line, std::istringstream& in, const char* what) {
    long long v;
    if (!(in >> v)) throw ParseError(line.number, ParseErrorKind::Format,
                                     std::string("expected ") + what);
    return v;
}

void expect_end(const Line& line, std::istringstream& in) {
    std::string rest;
    if (in >> rest)
        throw ParseError(line.number, ParseErrorKind::Format, "trailing token '" + rest + "'");
}

} // namespace

Instance parse_instance(const std::string& text) {
    auto lines = significant_lines(text);
    size_t pos = 0;
    auto next = [&]() -> const Line& {
        if (pos >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number, ParseErrorKind::Format,
                             "unexpected end of input");
        return lines[pos++];
    };

    const Line& header = next();
    std::istringstream hin(header.text);
    std::string tag;
    hin >> tag;
    if (tag != "rct")
        throw ParseError(header.number, ParseErrorKind::Format,
                         "expected header 'rct <n> <m> <colors>'");
    long long n = parse_int(header, hin, "vertex count");
    long long m = parse_int(header, hin, "edge count");
    long long q = parse_int(header, hin, "color count");
    expect_end(header, hin);
    if (n < 0 || m < 0 || q < 0)
        throw ParseError(header.number, ParseErrorKind::Format, "negative count in header");

    ColoredGraph graph(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        const Line& line = next();
        std::istringstream in(line.text);
        in >> tag;
        if (tag != "e")
            throw ParseError(line.number, ParseErrorKind::Format, "expected edge line 'e u v color'");
        long long u = parse_int(line, in, "endpoint");
        long long v = parse_int(line, in, "endpoint");
        long long color = parse_int(line, in, "color");
        expect_end(line, in);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line.number, ParseErrorKind::Format, "endpoint out of range");
        if (color < 0 || color >= q)
            throw ParseError(line.number, ParseErrorKind::Format, "color out of range");
        try {
            graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v),
                           static_cast<Color>(color));
        } catch (const InvalidArgument& err) {
            throw ParseError(line.number, ParseErrorKind::Format, err.what());
        }
    }

    ReloadCostTable costs(static_cast<int>(q));
    std::vector<std::vector<Cost>> rows;
    std::vector<int> row_lines;
    for (long long r = 0; r < q; ++r) {
        const Line& line = next();
        std::istringstream in(line.text);
        in >> tag;
        if (tag != "c")
            throw ParseError(line.number, ParseErrorKind::Format,
                             "expected cost row 'c v0 v1 ...'");
        std::vector<Cost> row;
        for (long long j = 0; j < q; ++j) {
            long long v = parse_int(line, in, "cost entry");
            if (v < 0) throw ParseError(line.number, ParseErrorKind::Format, "negative cost");
            row.push_back(static_cast<Cost>(v));
        }
        expect_end(line, in);
        rows.push_back(std::move(row));
        row_lines.push_back(line.number);
    }
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            if (rows[a][b] != rows[b][a])
                throw ParseError(row_lines[std::max(a, b)], ParseErrorKind::AsymmetricCosts,
                                 "cost table is not symmetric at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
            if (a <= b) costs.set(static_cast<Color>(a), static_cast<Color>(b), rows[a][b]);
        }

    std::optional<Cost> budget;
    if (pos < lines.size()) {
        const Line& line = lines[pos++];
        std::istringstream in(line.text);
        in >> tag;
        if (tag != "k")
            throw ParseError(line.number, ParseErrorKind::Format, "unexpected line after cost rows");
        long long k = parse_int(line, in, "budget");
        expect_end(line, in);
        if (k < 0) throw ParseError(line.number, ParseErrorKind::Format, "negative budget");
        budget = static_cast<Cost>(k);
    }
    if (pos < lines.size())
        throw ParseError(lines[pos].number, ParseErrorKind::Format, "unexpected extra line");

    Instance inst(std::move(graph), std::move(costs));
    inst.budget = budget;
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    int q = inst.costs.num_colors();
    out << "rct " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << ' ' << q << '\n';
    for (const Edge& e : inst.graph.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << e.color << '\n';
    for (Color a = 0; a < q; ++a) {
        out << 'c';
        for (Color b = 0; b < q; ++b) out << ' ' << inst.costs.get(a, b);
        out << '\n';
    }
    if (inst.budget) out << "k " << *inst.budget << '\n';
    return out.str();
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
    out << serialize_instance(inst);
}

} // namespace rct
