#include "homfull/graph.hpp"

namespace homfull {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::adjacent_pair: return "AdjacentPair";
        case Errc::two_dipath: return "TwoDipath";
        case Errc::even_order: return "EvenOrder";
        case Errc::kind_mismatch: return "KindMismatch";
        case Errc::too_large: return "TooLarge";
        case Errc::not_acyclic: return "NotAcyclic";
        case Errc::not_oclique: return "NotOclique";
        case Errc::not_cograph: return "NotCograph";
        case Errc::no_gadget_found: return "NoGadgetFound";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::loop_edge: return "LoopEdge";
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::digon_in_oriented: return "DigonInOriented";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::usage_error: return "UsageError";
    }
    return "Unknown";
}

Graph::Builder::Builder(std::size_t n) : adj_(n) {
    if (n > kMaxOrder) throw Error(Errc::too_large, "order exceeds capacity");
}

Graph::Builder& Graph::Builder::connect(VertexId u, VertexId v) {
    if (u >= adj_.size() || v >= adj_.size())
        throw Error(Errc::index_out_of_range, "edge endpoint out of range");
    if (u == v) throw Error(Errc::loop_edge, "loop edge");
    adj_[u].insert(v);
    adj_[v].insert(u);
    return *this;
}

Graph Graph::Builder::build() && {
    Graph g;
    g.adj_ = std::move(adj_);
    return g;
}

Graph::Graph(std::size_t n) : adj_(n) {
    if (n > kMaxOrder) throw Error(Errc::too_large, "order exceeds capacity");
}

Graph Graph::from_edges(std::size_t n, std::span<const Link> edges) {
    Builder b(n);
    for (const auto& e : edges) {
        if (e.u < n && e.v < n && e.u != e.v && b.adjacent(e.u, e.v))
            throw Error(Errc::duplicate_edge, "duplicate edge");
        b.connect(e.u, e.v);
    }
    return std::move(b).build();
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (const auto& s : adj_) c += s.size();
    return c / 2;
}

std::vector<Link> Graph::edges() const {
    std::vector<Link> r;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (v > u) r.push_back({static_cast<VertexId>(u), v});
    return r;
}

Digraph to_digraph(const OrientedGraph& g) {
    Digraph::Builder b(g.order());
    for (const auto& a : g.arcs()) b.connect(a.u, a.v);
    return std::move(b).build();
}

OrientedGraph to_oriented(const Digraph& g) {
    OrientedGraph::Builder b(g.order());
    for (const auto& a : g.arcs()) b.connect(a.u, a.v);
    return std::move(b).build();
}

}  // namespace homfull
