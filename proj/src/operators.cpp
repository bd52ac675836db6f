#include "homfull/operators.hpp"

#include <algorithm>

namespace homfull {

namespace {

template <DirectedGraph G>
Graph underlying_of(const G& g) {
    Graph::Builder b(g.order());
    for (const auto& a : g.arcs()) b.connect(a.u, a.v);
    return std::move(b).build();
}

void check_pair(std::size_t n, VertexId u, VertexId v) {
    if (u >= n || v >= n) throw Error(Errc::index_out_of_range, "vertex out of range");
    if (u == v) throw Error(Errc::invalid_argument, "cannot identify a vertex with itself");
}

template <class Out, AnyGraph In>
Out collapse(const In& g, VertexId u, VertexId v) {
    check_pair(g.order(), u, v);
    if (g.adjacent(u, v)) throw Error(Errc::adjacent_pair, "identified vertices are adjacent");
    const auto map = identification_map(u, v);
    typename Out::Builder b(g.order() - 1);
    for (const auto& l : g.links()) b.connect(map(l.u), map(l.v));
    return std::move(b).build();
}

}  // namespace

Graph underlying(const OrientedGraph& g) { return underlying_of(g); }
Graph underlying(const Digraph& g) { return underlying_of(g); }

IdentificationMap identification_map(VertexId u, VertexId v) {
    return {std::min(u, v), std::max(u, v)};
}

Graph identify(const Graph& g, VertexId u, VertexId v) { return collapse<Graph>(g, u, v); }
Digraph identify(const OrientedGraph& g, VertexId u, VertexId v) { return collapse<Digraph>(g, u, v); }
Digraph identify(const Digraph& g, VertexId u, VertexId v) { return collapse<Digraph>(g, u, v); }

OrientedGraph oriented_identify(const OrientedGraph& g, VertexId u, VertexId v) {
    check_pair(g.order(), u, v);
    if (g.adjacent(u, v)) throw Error(Errc::adjacent_pair, "identified vertices are adjacent");
    if (has_two_dipath(g, u, v) || has_two_dipath(g, v, u))
        throw Error(Errc::two_dipath, "identified vertices are the ends of a 2-dipath");
    return collapse<OrientedGraph>(g, u, v);
}

Graph closure(const OrientedGraph& g) {
    Graph::Builder b(g.order());
    for (const auto& a : g.arcs()) b.connect(a.u, a.v);
    for (VertexId w = 0; w < g.order(); ++w)
        for (VertexId x : g.in(w))
            for (VertexId y : g.out(w))
                if (x != y) b.connect(x, y);
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    Graph::Builder b(g.order());
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.connect(u, v);
    return std::move(b).build();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    VertexSet unseen = VertexSet::range(g.order());
    while (!unseen.empty()) {
        const auto start = static_cast<VertexId>(unseen.first());
        VertexSet comp = VertexSet::single(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (VertexId x : frontier) next |= g.neighbours(x);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        unseen -= comp;
        result.push_back(comp);
    }
    return result;
}

}  // namespace homfull
