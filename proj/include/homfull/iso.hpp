#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "homfull/graph.hpp"
#include "homfull/limits.hpp"

namespace homfull {

enum class MapKind { isomorphism, subgraph, induced };

/// mapping[x] is the image of pattern vertex x.
struct VertexMap {
    std::vector<VertexId> mapping;
    MapKind kind = MapKind::isomorphism;
    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Minimum adjacency encoding over all vertex orders, prefixed by kind and order.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Bijection preserving links in both directions, or nullopt. Deterministic:
/// the lexicographically least isomorphism is returned.
template <AnyGraph G>
std::optional<VertexMap> are_isomorphic(const G& a, const G& b);

/// Injective map sending every link of `pattern` onto a link of `target`.
/// Deterministic for fixed inputs.
template <AnyGraph G>
std::optional<VertexMap> subgraph_embedding(const G& pattern, const G& target);

/// As subgraph_embedding, but non-links must map to non-links.
template <AnyGraph G>
std::optional<VertexMap> induced_embedding(const G& pattern, const G& target);

/// Errc::too_large above limits.canonical_order.
template <AnyGraph G>
CanonicalForm canonical_form(const G& g, const Limits& limits = default_limits());

/// Checks a map directly against both graphs; shares no code with the search.
template <AnyGraph G>
bool verify_map(const G& pattern, const G& target, const VertexMap& map);

}  // namespace homfull
