#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "homfull/constructions.hpp"
#include "homfull/graph.hpp"

namespace homfull {

using AnyValue = std::variant<Graph, OrientedGraph, Digraph>;

Kind kind_of(const AnyValue& value);
std::string_view kind_name(Kind kind);

/// Reads one value in the line format: a header `graph|oriented|digraph <n>`,
/// then `e u v` (graph) or `a u v` (directed kinds); `#` starts a comment.
/// Throws ParseError for syntax problems and Error for loops, duplicates,
/// digons in oriented files and out-of-range ids (both carry the line).
AnyValue parse(std::istream& in);
AnyValue parse_string(const std::string& text);
AnyValue parse_file(const std::filesystem::path& path);

/// Like parse, but Errc::kind_mismatch unless the file declares `want`.
Graph parse_graph(std::istream& in);
OrientedGraph parse_oriented(std::istream& in);

/// Header plus sorted edge or arc lines. `comments` are written first, one
/// per line, each prefixed by "# ".
void serialize(std::ostream& out, const AnyValue& value, const std::vector<std::string>& comments = {});
std::string to_text(const AnyValue& value, const std::vector<std::string>& comments = {});

/// One-way Graphviz export.
void write_dot(std::ostream& out, const AnyValue& value, const std::string& name = "G");

/// `map <label> <i> -> <target>` lines for every index map.
template <AnyGraph G>
std::vector<std::string> provenance(const ReductionInstance<G>& r) {
    std::vector<std::string> lines{"construction " + r.construction};
    for (const auto& m : r.maps)
        for (std::size_t i = 0; i < m.targets.size(); ++i)
            lines.push_back("map " + m.label + " " + std::to_string(i) + " -> " + std::to_string(m.targets[i]));
    return lines;
}

}  // namespace homfull
