#pragma once

#include <initializer_list>
#include <utility>

#include "homfull/graph.hpp"

namespace testing_util {

using homfull::VertexId;

inline homfull::OrientedGraph og(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
    homfull::OrientedGraph::Builder b(n);
    for (auto [u, v] : arcs) b.connect(u, v);
    return std::move(b).build();
}

inline homfull::Digraph dg(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> arcs) {
    homfull::Digraph::Builder b(n);
    for (auto [u, v] : arcs) b.connect(u, v);
    return std::move(b).build();
}

inline homfull::Graph gr(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    homfull::Graph::Builder b(n);
    for (auto [u, v] : edges) b.connect(u, v);
    return std::move(b).build();
}

}  // namespace testing_util
