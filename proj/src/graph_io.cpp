#include "rtkit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rtkit {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 0;

    bool next_line(std::string_view& out) {
        if (pos >= text.size()) return false;
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line;
        return true;
    }
};

// Parses an unsigned integer token; rejects signs and trailing junk.
std::uint64_t parse_u64(std::string_view tok, std::size_t line, const char* what) {
    if (tok.empty()) throw ParseError(line, std::string("missing ") + what);
    if (tok.front() == '-') throw ParseError(line, std::string("negative ") + what);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed ") + what);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace

WeightedDigraph parse_graph(std::string_view text) {
    Cursor cur{text};
    std::string_view header;
    if (!cur.next_line(header)) throw ParseError(1, "empty input");
    auto head = split_ws(header);
    if (head.size() != 2) throw ParseError(cur.line, "expected header \"n m\"");
    std::uint64_t n64 = parse_u64(head[0], cur.line, "vertex count");
    std::uint64_t m64 = parse_u64(head[1], cur.line, "edge count");
    if (n64 > kNoVertex) throw ParseError(cur.line, "vertex count out of range");
    const std::uint32_t n = static_cast<std::uint32_t>(n64);

    std::vector<Edge> edges;
    edges.reserve(m64);
    for (std::uint64_t i = 0; i < m64; ++i) {
        std::string_view ln;
        if (!cur.next_line(ln)) throw ParseError(cur.line + 1, "unexpected end of input");
        auto toks = split_ws(ln);
        if (toks.size() != 3) throw ParseError(cur.line, "expected \"u v w\"");
        std::uint64_t u = parse_u64(toks[0], cur.line, "vertex id");
        std::uint64_t v = parse_u64(toks[1], cur.line, "vertex id");
        std::uint64_t w = parse_u64(toks[2], cur.line, "weight");
        if (u >= n || v >= n) throw ParseError(cur.line, "vertex id >= n");
        if (u == v) throw ParseError(cur.line, "self-loop");
        if (w == kInf) throw ParseError(cur.line, "weight out of range");
        edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), w});
    }
    std::string_view rest;
    while (cur.next_line(rest)) {
        if (!split_ws(rest).empty()) throw ParseError(cur.line, "trailing content");
    }
    return WeightedDigraph::from_edges(n, std::move(edges));
}

std::string serialize_graph(const WeightedDigraph& g) {
    std::ostringstream os;
    os << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) os << e.from << ' ' << e.to << ' ' << e.w << '\n';
    return os.str();
}

WeightedDigraph load_graph_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const WeightedDigraph& g, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << serialize_graph(g);
}

} // namespace rtkit
