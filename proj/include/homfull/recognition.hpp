#pragma once

#include <vector>

#include "homfull/graph.hpp"
#include "homfull/limits.hpp"
#include "homfull/verdict.hpp"

namespace homfull {

/// N(u) and N(v) nested one way or the other. Errc::adjacent_pair when adjacent.
bool neighbourhood_comparable(const Graph& g, VertexId u, VertexId v);

/// Directed kinds: (N+(u) ⊆ N+(v) and N-(u) ⊆ N-(v)) or the same with u, v
/// swapped. Errc::adjacent_pair when adjacent.
bool neighbourhood_comparable(const OrientedGraph& g, VertexId u, VertexId v);
bool neighbourhood_comparable(const Digraph& g, VertexId u, VertexId v);

/// Whether u's in- and out-neighbourhoods are both contained in v's.
template <DirectedGraph G>
bool dominated_by(const G& g, VertexId u, VertexId v) {
    return g.out(u).is_subset_of(g.out(v)) && g.in(u).is_subset_of(g.in(v));
}

/// Every non-adjacent pair neighbourhood comparable. Negative witness: the
/// lexicographically first incomparable pair.
Verdict is_hom_full_graph(const Graph& g);

/// No induced 2K2 and no induced P4. Negative witness: ForbiddenQuad.
Verdict forbidden_subgraph_check(const Graph& g);

/// Every in-neighbour/out-neighbour pair of every vertex adjacent.
/// Negative witness: the lexicographically first InducedDipath (tail, middle, head).
Verdict is_quasi_transitive(const OrientedGraph& g);
Verdict is_quasi_transitive(const Digraph& g);

/// Directed analogue of is_hom_full_graph; negative witness is a VertexPair.
Verdict pairwise_comparable(const OrientedGraph& g);

/// Hom-fullness for the antisymmetric reading: quasi-transitive and the
/// underlying graph hom-full. Witness from whichever check fails first.
Verdict is_hom_full_antisym(const OrientedGraph& g);

/// Every non-adjacent pair joined by a 2-dipath in some direction.
/// Negative witness: the first pair at distance > 2 both ways.
Verdict is_oriented_clique(const OrientedGraph& g);

/// Non-adjacent pairs not joined by any 2-dipath, lexicographic.
std::vector<VertexPair> elementary_pairs(const OrientedGraph& g);

/// Hom-fullness for the oriented reading: each elementary quotient embeds as
/// a subgraph. Positive witness: one embedding per elementary pair; negative
/// witness: the first failing pair. Errc::too_large above limits.exhaustive_order.
Verdict is_hom_full_oriented(const OrientedGraph& g, const Limits& limits = default_limits());

/// Map from the quotient oriented_identify(g, u, v) into g, sending the merged
/// vertex to `onto` and every other vertex to itself. Valid as an embedding
/// whenever the other vertex of the pair is dominated by `onto`.
VertexMap collapse_retraction(const OrientedGraph& g, VertexPair pair, VertexId onto);

}  // namespace homfull
