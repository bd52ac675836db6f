#include "homfull/recognition.hpp"

#include "homfull/iso.hpp"
#include "homfull/operators.hpp"

namespace homfull {

namespace {

void require_non_adjacent(bool adjacent) {
    if (adjacent) throw Error(Errc::adjacent_pair, "neighbourhood comparability needs a non-adjacent pair");
}

template <DirectedGraph G>
bool directed_comparable(const G& g, VertexId u, VertexId v) {
    require_non_adjacent(g.adjacent(u, v));
    return dominated_by(g, u, v) || dominated_by(g, v, u);
}

template <DirectedGraph G>
Verdict quasi_transitive(const G& g) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId w : g.out(u))
            for (VertexId v : g.out(w))
                if (u != v && !g.adjacent(u, v)) return {false, InducedDipath{u, w, v}};
    return {true, {}};
}

}  // namespace

bool neighbourhood_comparable(const Graph& g, VertexId u, VertexId v) {
    require_non_adjacent(g.adjacent(u, v));
    return g.neighbours(u).is_subset_of(g.neighbours(v)) || g.neighbours(v).is_subset_of(g.neighbours(u));
}

bool neighbourhood_comparable(const OrientedGraph& g, VertexId u, VertexId v) {
    return directed_comparable(g, u, v);
}

bool neighbourhood_comparable(const Digraph& g, VertexId u, VertexId v) {
    return directed_comparable(g, u, v);
}

Verdict is_hom_full_graph(const Graph& g) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !neighbourhood_comparable(g, u, v)) return {false, VertexPair{u, v}};
    return {true, {}};
}

Verdict forbidden_subgraph_check(const Graph& g) {
    const auto n = static_cast<VertexId>(g.order());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                for (VertexId d = c + 1; d < n; ++d) {
                    const std::array<VertexId, 4> q{a, b, c, d};
                    std::array<int, 4> deg{};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    int ones = 0;
                    int twos = 0;
                    for (int x : deg) {
                        ones += x == 1;
                        twos += x == 2;
                    }
                    if (edges == 2 && ones == 4) return {false, ForbiddenQuad{q, ForbiddenShape::two_k2}};
                    if (edges == 3 && ones == 2 && twos == 2) return {false, ForbiddenQuad{q, ForbiddenShape::p4}};
                }
    return {true, {}};
}

Verdict is_quasi_transitive(const OrientedGraph& g) { return quasi_transitive(g); }
Verdict is_quasi_transitive(const Digraph& g) { return quasi_transitive(g); }

Verdict pairwise_comparable(const OrientedGraph& g) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !directed_comparable(g, u, v)) return {false, VertexPair{u, v}};
    return {true, {}};
}

Verdict is_hom_full_antisym(const OrientedGraph& g) {
    if (auto qt = is_quasi_transitive(g); !qt) return qt;
    return is_hom_full_graph(underlying(g));
}

Verdict is_oriented_clique(const OrientedGraph& g) {
    const Graph cl = closure(g);
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!cl.adjacent(u, v)) return {false, VertexPair{u, v}};
    return {true, {}};
}

std::vector<VertexPair> elementary_pairs(const OrientedGraph& g) {
    const Graph cl = closure(g);
    std::vector<VertexPair> pairs;
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!cl.adjacent(u, v)) pairs.push_back({u, v});
    return pairs;
}

VertexMap collapse_retraction(const OrientedGraph& g, VertexPair pair, VertexId onto) {
    const auto map = identification_map(pair.u, pair.v);
    VertexMap m;
    m.kind = MapKind::subgraph;
    m.mapping.resize(g.order() - 1);
    for (VertexId x = 0; x < g.order(); ++x) {
        if (x == map.drop) continue;
        m.mapping[map(x)] = x;
    }
    m.mapping[map.keep] = onto;
    return m;
}

Verdict is_hom_full_oriented(const OrientedGraph& g, const Limits& limits) {
    if (g.order() > limits.exhaustive_order)
        throw Error(Errc::too_large, "graph too large for the elementary-image check");
    std::vector<PairEmbedding> embeddings;
    for (const auto& pair : elementary_pairs(g)) {
        const OrientedGraph quotient = oriented_identify(g, pair.u, pair.v);
        std::optional<VertexMap> found;
        // Comparable pairs collapse onto the dominating vertex directly.
        if (dominated_by(g, pair.u, pair.v)) {
            found = collapse_retraction(g, pair, pair.v);
        } else if (dominated_by(g, pair.v, pair.u)) {
            found = collapse_retraction(g, pair, pair.u);
        }
        if (found && !verify_map(quotient, g, *found)) found.reset();
        if (!found) found = subgraph_embedding(quotient, g);
        if (!found) return {false, pair};
        embeddings.push_back({pair, std::move(*found)});
    }
    return {true, std::move(embeddings)};
}

}  // namespace homfull
