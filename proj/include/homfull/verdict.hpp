#pragma once

#include <array>
#include <variant>
#include <vector>

#include "homfull/graph.hpp"
#include "homfull/iso.hpp"

namespace homfull {

/// Unordered vertex pair, stored with u < v.
struct VertexPair {
    VertexId u = 0;
    VertexId v = 0;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

enum class ForbiddenShape { two_k2, p4 };

/// Four vertices inducing 2K2 or P4, in increasing order.
struct ForbiddenQuad {
    std::array<VertexId, 4> vertices{};
    ForbiddenShape shape = ForbiddenShape::p4;
    friend bool operator==(const ForbiddenQuad&, const ForbiddenQuad&) = default;
};

/// tail -> middle -> head with tail and head non-adjacent.
struct InducedDipath {
    VertexId tail = 0;
    VertexId middle = 0;
    VertexId head = 0;
    friend bool operator==(const InducedDipath&, const InducedDipath&) = default;
};

/// Blocks of a vertex partition; blocks sorted by smallest member, members ascending.
struct Partition {
    std::vector<std::vector<VertexId>> blocks;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// For a positive elementary check: the quotient by `pair` embeds via `embedding`.
struct PairEmbedding {
    VertexPair pair;
    VertexMap embedding;
    friend bool operator==(const PairEmbedding&, const PairEmbedding&) = default;
};

using Witness = std::variant<std::monostate, VertexPair, ForbiddenQuad, InducedDipath, VertexMap,
                             std::vector<PairEmbedding>, Partition>;

struct Verdict {
    bool answer = false;
    Witness witness;
    explicit operator bool() const { return answer; }
};

}  // namespace homfull
