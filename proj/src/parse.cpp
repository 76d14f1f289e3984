#include "iscount/parse.hpp"

#include <istream>
#include <sstream>

namespace iscount {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses exactly the expected tokens from one line; rejects trailing junk.
std::vector<long> fields(const std::string& s, size_t want, int line) {
    std::istringstream is(s);
    std::vector<long> out;
    long x;
    while (is >> x) out.push_back(x);
    std::string tail;
    if (!is.eof() && is.fail()) {
        is.clear();
        is >> tail;
    }
    if (!tail.empty() || out.size() != want) fail(line, "malformed line '" + s + "'");
    return out;
}

void add_parsed_edge(Graph& g, long n, long u, long v, int line) {
    if (u < 1 || u > n || v < 1 || v > n) fail(line, "vertex index out of range");
    if (u == v) fail(line, "self-loop");
    if (g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
        fail(line, "duplicate edge");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
}

Graph parse_edgelist(std::istream& in) {
    std::string s;
    int line = 0;
    long n = -1, m = -1;
    while (std::getline(in, s)) {
        ++line;
        if (blank(s)) continue;
        auto f = fields(s, 2, line);
        n = f[0];
        m = f[1];
        break;
    }
    if (n < 0) throw ParseError("empty input: expected 'n m' header");
    if (n > 0 && m < 0) fail(line, "malformed header");
    Graph g;
    for (long v = 1; v <= n; ++v) g.add_vertex(static_cast<VertexId>(v));
    long seen = 0;
    while (std::getline(in, s)) {
        ++line;
        if (blank(s)) continue;
        if (seen == m) fail(line, "more edges than declared");
        auto f = fields(s, 2, line);
        add_parsed_edge(g, n, f[0], f[1], line);
        ++seen;
    }
    if (seen != m)
        throw ParseError("unexpected end of input: " + std::to_string(seen) + " of " +
                         std::to_string(m) + " edges read");
    return g;
}

Graph parse_dimacs(std::istream& in) {
    std::string s;
    int line = 0;
    long n = -1, m = -1, seen = 0;
    Graph g;
    while (std::getline(in, s)) {
        ++line;
        if (blank(s)) continue;
        if (s[0] == 'c') continue;
        if (s[0] == 'p') {
            if (n >= 0) fail(line, "duplicate problem line");
            std::istringstream is(s);
            std::string p, kind;
            if (!(is >> p >> kind >> n >> m) || p != "p" || (kind != "edge" && kind != "col") ||
                n < 0 || m < 0)
                fail(line, "malformed problem line '" + s + "'");
            for (long v = 1; v <= n; ++v) g.add_vertex(static_cast<VertexId>(v));
        } else if (s[0] == 'e') {
            if (n < 0) fail(line, "edge before problem line");
            if (seen == m) fail(line, "more edges than declared");
            std::istringstream is(s);
            std::string e;
            long u, v;
            std::string tail;
            is >> e >> u >> v;
            if (is.fail() || e != "e") fail(line, "malformed edge line '" + s + "'");
            if (is >> tail) fail(line, "malformed edge line '" + s + "'");
            add_parsed_edge(g, n, u, v, line);
            ++seen;
        } else {
            fail(line, "unknown line type '" + s + "'");
        }
    }
    if (n < 0) throw ParseError("empty input: expected 'p edge n m'");
    if (seen != m)
        throw ParseError("unexpected end of input: " + std::to_string(seen) + " of " +
                         std::to_string(m) + " edges read");
    return g;
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edgelist ? parse_edgelist(in) : parse_dimacs(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    std::istringstream is(text);
    return parse_graph(is, format);
}

}  // namespace iscount
