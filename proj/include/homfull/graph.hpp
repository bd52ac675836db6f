#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "homfull/error.hpp"
#include "homfull/vertex_set.hpp"

namespace homfull {

enum class Kind { graph, oriented, digraph };

/// An unordered edge (stored with u < v) or an arc u -> v.
struct Link {
    VertexId u = 0;
    VertexId v = 0;
    friend auto operator<=>(const Link&, const Link&) = default;
};

/// Simple irreflexive undirected graph. Immutable once built.
class Graph {
public:
    static constexpr Kind kind = Kind::graph;

    class Builder {
    public:
        explicit Builder(std::size_t n);
        /// Idempotent; loops and out-of-range ids throw.
        Builder& connect(VertexId u, VertexId v);
        [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return adj_[u].contains(v); }
        [[nodiscard]] Graph build() &&;

    private:
        std::vector<VertexSet> adj_;
    };

    Graph() = default;
    explicit Graph(std::size_t n);

    /// Strict constructor: loops, duplicates and out-of-range ids are errors.
    static Graph from_edges(std::size_t n, std::span<const Link> edges);

    [[nodiscard]] std::size_t order() const { return adj_.size(); }
    [[nodiscard]] const VertexSet& neighbours(VertexId v) const { return adj_[v]; }
    [[nodiscard]] const VertexSet& out(VertexId v) const { return adj_[v]; }
    [[nodiscard]] const VertexSet& in(VertexId v) const { return adj_[v]; }
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return adj_[u].contains(v); }
    [[nodiscard]] bool has_link(VertexId u, VertexId v) const { return adjacent(u, v); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adj_[v].size(); }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] std::size_t link_count() const { return edge_count(); }
    /// Sorted, each edge once with u < v.
    [[nodiscard]] std::vector<Link> edges() const;
    [[nodiscard]] std::vector<Link> links() const { return edges(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

namespace detail {

/// Shared storage for the two directed kinds.
template <bool AllowDigons>
class BasicDigraph {
public:
    static constexpr Kind kind = AllowDigons ? Kind::digraph : Kind::oriented;

    class Builder {
    public:
        explicit Builder(std::size_t n) : out_(n), in_(n) {
            if (n > kMaxOrder) throw Error(Errc::too_large, "order exceeds capacity");
        }
        /// Idempotent; loops and out-of-range ids throw. Digons are checked in build().
        Builder& connect(VertexId u, VertexId v) {
            if (u >= out_.size() || v >= out_.size())
                throw Error(Errc::index_out_of_range, "arc endpoint out of range");
            if (u == v) throw Error(Errc::loop_edge, "loop arc");
            out_[u].insert(v);
            in_[v].insert(u);
            return *this;
        }
        [[nodiscard]] bool has_arc(VertexId u, VertexId v) const { return out_[u].contains(v); }
        [[nodiscard]] BasicDigraph build() && {
            if constexpr (!AllowDigons) {
                for (std::size_t v = 0; v < out_.size(); ++v)
                    if (out_[v].intersects(in_[v]))
                        throw Error(Errc::digon_in_oriented, "oriented graph contains a digon");
            }
            BasicDigraph g;
            g.out_ = std::move(out_);
            g.in_ = std::move(in_);
            return g;
        }

    private:
        std::vector<VertexSet> out_;
        std::vector<VertexSet> in_;
    };

    BasicDigraph() = default;
    explicit BasicDigraph(std::size_t n) : out_(n), in_(n) {
        if (n > kMaxOrder) throw Error(Errc::too_large, "order exceeds capacity");
    }

    /// Strict constructor: loops, duplicate arcs, out-of-range ids and (for the
    /// oriented kind) digons are errors.
    static BasicDigraph from_arcs(std::size_t n, std::span<const Link> arcs) {
        Builder b(n);
        for (const auto& a : arcs) {
            if (a.u < n && a.v < n && a.u != a.v && b.has_arc(a.u, a.v))
                throw Error(Errc::duplicate_edge, "duplicate arc");
            b.connect(a.u, a.v);
        }
        return std::move(b).build();
    }

    [[nodiscard]] std::size_t order() const { return out_.size(); }
    [[nodiscard]] const VertexSet& out(VertexId v) const { return out_[v]; }
    [[nodiscard]] const VertexSet& in(VertexId v) const { return in_[v]; }
    [[nodiscard]] VertexSet neighbours(VertexId v) const { return out_[v] | in_[v]; }
    [[nodiscard]] bool has_arc(VertexId u, VertexId v) const { return out_[u].contains(v); }
    [[nodiscard]] bool has_link(VertexId u, VertexId v) const { return has_arc(u, v); }
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const {
        return out_[u].contains(v) || in_[u].contains(v);
    }
    [[nodiscard]] std::size_t out_degree(VertexId v) const { return out_[v].size(); }
    [[nodiscard]] std::size_t in_degree(VertexId v) const { return in_[v].size(); }

    [[nodiscard]] std::size_t arc_count() const {
        std::size_t c = 0;
        for (const auto& s : out_) c += s.size();
        return c;
    }
    [[nodiscard]] std::size_t link_count() const { return arc_count(); }

    /// Sorted lexicographically by (tail, head).
    [[nodiscard]] std::vector<Link> arcs() const {
        std::vector<Link> r;
        for (std::size_t u = 0; u < out_.size(); ++u)
            for (VertexId v : out_[u]) r.push_back({static_cast<VertexId>(u), v});
        return r;
    }
    [[nodiscard]] std::vector<Link> links() const { return arcs(); }

    friend bool operator==(const BasicDigraph&, const BasicDigraph&) = default;

private:
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

}  // namespace detail

/// Irreflexive digraph without digons.
using OrientedGraph = detail::BasicDigraph<false>;
/// Irreflexive digraph; digons allowed.
using Digraph = detail::BasicDigraph<true>;

template <class G>
concept AnyGraph = std::same_as<G, Graph> || std::same_as<G, OrientedGraph> || std::same_as<G, Digraph>;

template <class G>
concept DirectedGraph = std::same_as<G, OrientedGraph> || std::same_as<G, Digraph>;

Digraph to_digraph(const OrientedGraph& g);
/// Throws Errc::digon_in_oriented when g has a digon.
OrientedGraph to_oriented(const Digraph& g);

}  // namespace homfull
