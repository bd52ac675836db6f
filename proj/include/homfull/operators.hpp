#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homfull/graph.hpp"

namespace homfull {

/// Per-vertex neighbourhoods. For a Graph all three tables coincide.
struct Neighbourhoods {
    std::vector<VertexSet> all;
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;
};

template <AnyGraph G>
Neighbourhoods neighbourhoods(const G& g) {
    Neighbourhoods nb;
    for (VertexId v = 0; v < g.order(); ++v) {
        nb.all.push_back(g.out(v) | g.in(v));
        nb.out.push_back(g.out(v));
        nb.in.push_back(g.in(v));
    }
    return nb;
}

Graph underlying(const OrientedGraph& g);
Graph underlying(const Digraph& g);

/// Re-indexing used by every identification: the merged vertex takes the slot
/// of min(u, v), max(u, v) disappears and vertices above it shift down by one.
/// Vertices strictly between keep their index.
struct IdentificationMap {
    VertexId keep;
    VertexId drop;
    [[nodiscard]] VertexId operator()(VertexId x) const {
        if (x == drop) return keep;
        return x > drop ? x - 1 : x;
    }
};

IdentificationMap identification_map(VertexId u, VertexId v);

/// Quotient by a single non-adjacent pair. Errc::adjacent_pair when u, v are adjacent.
Graph identify(const Graph& g, VertexId u, VertexId v);
/// The oriented input is read as an antisymmetric digraph, so digons may appear.
Digraph identify(const OrientedGraph& g, VertexId u, VertexId v);
Digraph identify(const Digraph& g, VertexId u, VertexId v);

/// Elementary identification for the oriented-graph reading: u, v must be
/// non-adjacent and not the ends of a 2-dipath (Errc::two_dipath otherwise).
OrientedGraph oriented_identify(const OrientedGraph& g, VertexId u, VertexId v);

/// Whether some x has u -> x -> v.
template <DirectedGraph G>
bool has_two_dipath(const G& g, VertexId u, VertexId v) {
    return g.out(u).intersects(g.in(v));
}

/// Pairs at directed distance at most 2 (in either direction) become edges.
Graph closure(const OrientedGraph& g);

/// Shortest directed path length from u to v; nullopt when unreachable.
template <AnyGraph G>
std::optional<std::size_t> directed_distance(const G& g, VertexId u, VertexId v) {
    if (u == v) return 0;
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (std::size_t d = 1; d <= g.order(); ++d) {
        VertexSet next;
        for (VertexId x : frontier) next |= g.out(x);
        next -= seen;
        if (next.contains(v)) return d;
        if (next.empty()) break;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

template <AnyGraph G>
G induced_subgraph(const G& g, std::span<const VertexId> keep) {
    typename G::Builder b(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (i != j && g.has_link(keep[i], keep[j]))
                b.connect(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return std::move(b).build();
}

template <AnyGraph G>
G induced_subgraph(const G& g, const VertexSet& keep) {
    std::vector<VertexId> ids(keep.begin(), keep.end());
    return induced_subgraph(g, std::span<const VertexId>(ids));
}

template <AnyGraph G>
G delete_vertex(const G& g, VertexId v) {
    VertexSet keep = VertexSet::range(g.order());
    keep.erase(v);
    return induced_subgraph(g, keep);
}

/// Drops the arc u -> v (or edge {u, v}); the vertex set is unchanged.
template <AnyGraph G>
G delete_link(const G& g, VertexId u, VertexId v) {
    typename G::Builder b(g.order());
    for (const auto& l : g.links())
        if (!(l.u == u && l.v == v) && !(G::kind == Kind::graph && l.u == v && l.v == u))
            b.connect(l.u, l.v);
    return std::move(b).build();
}

/// Vertex x of g becomes perm[x].
template <AnyGraph G>
G relabel(const G& g, std::span<const VertexId> perm) {
    typename G::Builder b(g.order());
    for (const auto& l : g.links()) b.connect(perm[l.u], perm[l.v]);
    return std::move(b).build();
}

Graph complement(const Graph& g);

/// Connected components (weak components for directed kinds), ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g);

template <DirectedGraph G>
std::vector<VertexSet> components(const G& g) {
    return components(underlying(g));
}

template <DirectedGraph G>
bool is_acyclic(const G& g) {
    std::vector<std::size_t> indeg(g.order());
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < g.order(); ++v)
        if ((indeg[v] = g.in(v).size()) == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        ++removed;
        for (VertexId w : g.out(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return removed == g.order();
}

}  // namespace homfull
