#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "homfull/graph.hpp"

namespace homfull {

using Rng = std::mt19937_64;

/// Circulant tournament: i -> j iff (j - i) mod k lies in [1, (k - 1) / 2].
/// Errc::even_order unless k is odd.
OrientedGraph regular_tournament(std::size_t k);

/// Oriented complete bipartite graph on a_0..a_{n-1} (ids 0..n-1) and
/// b_0..b_{n-1} (ids n..2n-1): a_i -> b_j when i <= j, b_j -> a_i otherwise.
OrientedGraph bn_oclique(std::size_t n);

/// Parent of each node of a rooted forest; nullopt marks a root. Parents must
/// precede their children.
using Forest = std::vector<std::optional<VertexId>>;

/// Complement of the ancestor/descendant comparability graph of a forest.
Graph forest_cocomparability(const Forest& forest);

/// Seeded forest: node i becomes a new root or picks a parent uniformly among
/// nodes 0..i-1.
Forest random_forest(std::size_t n, std::uint64_t seed);

/// Homomorphically full graph on n vertices built from a random forest.
Graph homfull_graph_generator(std::size_t n, std::uint64_t seed);

// Standard families.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
OrientedGraph arcless(std::size_t n);
OrientedGraph directed_path(std::size_t n);
OrientedGraph directed_cycle(std::size_t n);
/// i -> j for all i < j.
OrientedGraph transitive_tournament(std::size_t n);

// Exhaustive enumeration by index. Vertex pairs are taken in lexicographic
// order (0,1), (0,2), ..., (n-2,n-1).
std::uint64_t pair_count(std::size_t n);
/// 2^(n choose 2).
std::uint64_t labelled_graph_count(std::size_t n);
/// Bit p of code selects pair p.
Graph graph_from_code(std::size_t n, std::uint64_t code);
/// 3^(n choose 2).
std::uint64_t oriented_graph_count(std::size_t n);
/// Base-3 digit p of code: 0 none, 1 low -> high, 2 high -> low.
OrientedGraph oriented_from_code(std::size_t n, std::uint64_t code);

/// 2^m for a graph with m edges.
std::uint64_t orientation_count(const Graph& g);
/// Edge k (in sorted edge order) reads bit m-1-k of code, so numeric order of
/// codes is lexicographic order of direction vectors. Bit 0 means low -> high.
OrientedGraph orientation_from_code(const Graph& g, std::uint64_t code);

OrientedGraph random_orientation(const Graph& g, Rng& rng);
/// Uniform over all oriented graphs on n labelled vertices.
OrientedGraph random_oriented(std::size_t n, Rng& rng);
/// Arcs only from lower to higher index, each present with probability p.
OrientedGraph random_dag(std::size_t n, double p, Rng& rng);
Graph random_graph(std::size_t n, double p, Rng& rng);
std::vector<VertexId> random_permutation(std::size_t n, Rng& rng);

}  // namespace homfull
