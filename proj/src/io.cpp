#include "homfull/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace homfull {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::optional<std::size_t> number(const std::string& s) {
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

template <class Builder>
AnyValue read_links(std::istream& in, std::size_t& lineno, Kind kind, std::size_t n) {
    Builder b(n);
    std::set<std::pair<VertexId, VertexId>> seen;
    const std::string tag = kind == Kind::graph ? "e" : "a";
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto t = tokens_of(line);
        if (t.empty()) continue;
        if (t.size() != 3 || t[0] != tag)
            throw ParseError(Errc::syntax_error, lineno, "expected '" + tag + " <u> <v>'");
        const auto u = number(t[1]);
        const auto v = number(t[2]);
        if (!u || !v) throw ParseError(Errc::syntax_error, lineno, "vertex ids must be non-negative integers");
        if (*u >= n || *v >= n) throw ParseError(Errc::index_out_of_range, lineno, "vertex id out of range");
        if (*u == *v) throw ParseError(Errc::loop_edge, lineno, "loops are not allowed");
        const auto a = static_cast<VertexId>(*u);
        const auto c = static_cast<VertexId>(*v);
        const auto key = kind == Kind::graph ? std::pair(std::min(a, c), std::max(a, c)) : std::pair(a, c);
        if (!seen.insert(key).second) throw ParseError(Errc::duplicate_edge, lineno, "repeated edge or arc");
        if (kind == Kind::oriented && seen.count({c, a}))
            throw ParseError(Errc::digon_in_oriented, lineno, "oriented graphs cannot contain a digon");
        b.connect(a, c);
    }
    return std::move(b).build();
}

template <class G>
G expect(AnyValue v, Kind want) {
    if (auto* g = std::get_if<G>(&v)) return std::move(*g);
    throw Error(Errc::kind_mismatch,
                "expected " + std::string(kind_name(want)) + ", got " + std::string(kind_name(kind_of(v))));
}

}  // namespace

Kind kind_of(const AnyValue& value) {
    return std::visit([](const auto& g) { return std::decay_t<decltype(g)>::kind; }, value);
}

std::string_view kind_name(Kind kind) {
    switch (kind) {
        case Kind::graph: return "graph";
        case Kind::oriented: return "oriented";
        case Kind::digraph: return "digraph";
    }
    return "?";
}

AnyValue parse(std::istream& in) {
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto t = tokens_of(line);
        if (t.empty()) continue;
        if (t.size() != 2) throw ParseError(Errc::syntax_error, lineno, "expected '<kind> <n>' header");
        const auto n = number(t[1]);
        if (!n) throw ParseError(Errc::syntax_error, lineno, "vertex count must be a non-negative integer");
        if (*n > kMaxOrder) throw ParseError(Errc::too_large, lineno, "at most " + std::to_string(kMaxOrder) + " vertices");
        if (t[0] == "graph") return read_links<Graph::Builder>(in, lineno, Kind::graph, *n);
        if (t[0] == "oriented") return read_links<OrientedGraph::Builder>(in, lineno, Kind::oriented, *n);
        if (t[0] == "digraph") return read_links<Digraph::Builder>(in, lineno, Kind::digraph, *n);
        throw ParseError(Errc::syntax_error, lineno, "unknown kind '" + t[0] + "'");
    }
    throw ParseError(Errc::syntax_error, lineno + 1, "missing header");
}

AnyValue parse_string(const std::string& text) {
    std::istringstream ss(text);
    return parse(ss);
}

AnyValue parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot open " + path.string());
    return parse(in);
}

Graph parse_graph(std::istream& in) { return expect<Graph>(parse(in), Kind::graph); }
OrientedGraph parse_oriented(std::istream& in) { return expect<OrientedGraph>(parse(in), Kind::oriented); }

void serialize(std::ostream& out, const AnyValue& value, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            out << kind_name(G::kind) << ' ' << g.order() << '\n';
            const char tag = G::kind == Kind::graph ? 'e' : 'a';
            for (const auto& l : g.links()) out << tag << ' ' << l.u << ' ' << l.v << '\n';
        },
        value);
}

std::string to_text(const AnyValue& value, const std::vector<std::string>& comments) {
    std::ostringstream ss;
    serialize(ss, value, comments);
    return ss.str();
}

void write_dot(std::ostream& out, const AnyValue& value, const std::string& name) {
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            const bool directed = G::kind != Kind::graph;
            out << (directed ? "digraph " : "graph ") << name << " {\n";
            for (VertexId v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
            for (const auto& l : g.links()) out << "  " << l.u << (directed ? " -> " : " -- ") << l.v << ";\n";
            out << "}\n";
        },
        value);
}

}  // namespace homfull
