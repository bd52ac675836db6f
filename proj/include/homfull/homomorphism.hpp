#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "homfull/graph.hpp"
#include "homfull/iso.hpp"
#include "homfull/limits.hpp"
#include "homfull/verdict.hpp"

namespace homfull {

/// How an oriented graph's homomorphic images are read.
enum class ImageSemantics {
    /// Images must stay digon-free.
    oriented,
    /// Images may contain digons.
    antisymmetric,
};

/// A partition in restricted-growth form: block_of[x] is the block of x and
/// blocks are numbered by first occurrence.
struct BlockAssignment {
    std::vector<std::uint32_t> block_of;
    std::size_t blocks = 0;
    [[nodiscard]] Partition partition() const;
};

/// Calls `visit` once per partition of V(g) into independent blocks, in
/// restricted-growth order. With `digon_free`, also requires that no two
/// blocks have arcs in both directions.
void for_each_valid_partition(const Graph& g, const std::function<void(const BlockAssignment&)>& visit);
void for_each_valid_partition(const OrientedGraph& g, bool digon_free,
                              const std::function<void(const BlockAssignment&)>& visit);

Graph quotient(const Graph& g, const BlockAssignment& p);
Digraph quotient(const OrientedGraph& g, const BlockAssignment& p);
/// Errc::digon_in_oriented when the partition merges opposite arcs.
OrientedGraph oriented_quotient(const OrientedGraph& g, const BlockAssignment& p);

template <AnyGraph Q>
struct Image {
    Q graph;
    /// First partition (in enumeration order) producing this image.
    Partition partition;
    CanonicalForm form;
};

/// Complete homomorphic images up to isomorphism, sorted by canonical form
/// (so by order first). Errc::too_large above limits.exhaustive_order.
std::vector<Image<Graph>> graph_images(const Graph& g, const Limits& limits = default_limits());
std::vector<Image<OrientedGraph>> oriented_images(const OrientedGraph& g, const Limits& limits = default_limits());
std::vector<Image<Digraph>> antisymmetric_images(const OrientedGraph& g, const Limits& limits = default_limits());

/// Every image embeds as a subgraph. Negative witness: the Partition of the
/// first image (in canonical order) that does not.
Verdict is_hom_full_by_definition(const Graph& g, const Limits& limits = default_limits());
Verdict is_hom_full_by_definition(const OrientedGraph& g, ImageSemantics semantics,
                                  const Limits& limits = default_limits());

/// Every image of a graph embeds as an induced subgraph.
Verdict every_image_induced(const Graph& g, const Limits& limits = default_limits());

/// Every valid partition admits one representative per block such that the
/// representatives induce exactly the quotient (a retraction fixing every
/// singleton block). Negative witness: the first partition without one.
Verdict every_image_retract(const Graph& g, const Limits& limits = default_limits());

/// Some link-preserving map from g into h; vertex i of g goes to result[i].
/// Errc::too_large when g.order() > limits.hom_order.
template <AnyGraph G>
std::optional<std::vector<VertexId>> hom_exists(const G& g, const G& h, const Limits& limits = default_limits());

/// Smallest image for the oriented reading; ties broken by canonical form.
OrientedGraph minimum_image(const OrientedGraph& g, const Limits& limits = default_limits());

/// Vertex set of the minimum-order induced subgraph admitting a homomorphism
/// from g; the lexicographically least such set.
std::vector<VertexId> oriented_core_vertices(const OrientedGraph& g, const Limits& limits = default_limits());

OrientedGraph oriented_core(const OrientedGraph& g, const Limits& limits = default_limits());

}  // namespace homfull
