#include "homfull/generators.hpp"

#include <algorithm>
#include <numeric>

namespace homfull {

OrientedGraph regular_tournament(std::size_t k) {
    if (k % 2 == 0) throw Error(Errc::even_order, "regular tournament needs odd order");
    OrientedGraph::Builder b(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t d = 1; d <= (k - 1) / 2; ++d)
            b.connect(static_cast<VertexId>(i), static_cast<VertexId>((i + d) % k));
    return std::move(b).build();
}

OrientedGraph bn_oclique(std::size_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "B_n needs n >= 1");
    OrientedGraph::Builder b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto a = static_cast<VertexId>(i);
            const auto bj = static_cast<VertexId>(n + j);
            if (i <= j) {
                b.connect(a, bj);
            } else {
                b.connect(bj, a);
            }
        }
    }
    return std::move(b).build();
}

Graph forest_cocomparability(const Forest& forest) {
    const std::size_t n = forest.size();
    std::vector<VertexSet> ancestors(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto p = forest[i]) {
            if (*p >= i) throw Error(Errc::invalid_argument, "forest parent must precede child");
            ancestors[i] = ancestors[*p];
            ancestors[i].insert(*p);
        }
    }
    Graph::Builder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!ancestors[v].contains(u)) b.connect(u, v);
    return std::move(b).build();
}

Forest random_forest(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Forest f(n);
    for (std::size_t i = 1; i < n; ++i) {
        // i + 1 equally likely outcomes: a new root or one of the i earlier nodes.
        std::uniform_int_distribution<std::size_t> pick(0, i);
        const auto c = pick(rng);
        if (c < i) f[i] = static_cast<VertexId>(c);
    }
    return f;
}

Graph homfull_graph_generator(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(Errc::invalid_argument, "generator needs n >= 1");
    return forest_cocomparability(random_forest(n, seed));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
    Graph::Builder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) b.connect(u, v);
    return std::move(b).build();
}

Graph path_graph(std::size_t n) {
    Graph::Builder b(n);
    for (VertexId v = 1; v < n; ++v) b.connect(v - 1, v);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(Errc::invalid_argument, "cycle needs n >= 3");
    Graph::Builder b(n);
    for (VertexId v = 0; v < n; ++v) b.connect(v, static_cast<VertexId>((v + 1) % n));
    return std::move(b).build();
}

OrientedGraph arcless(std::size_t n) { return OrientedGraph(n); }

OrientedGraph directed_path(std::size_t n) {
    OrientedGraph::Builder b(n);
    for (VertexId v = 1; v < n; ++v) b.connect(v - 1, v);
    return std::move(b).build();
}

OrientedGraph directed_cycle(std::size_t n) {
    if (n < 3) throw Error(Errc::invalid_argument, "directed cycle needs n >= 3");
    OrientedGraph::Builder b(n);
    for (VertexId v = 0; v < n; ++v) b.connect(v, static_cast<VertexId>((v + 1) % n));
    return std::move(b).build();
}

OrientedGraph transitive_tournament(std::size_t n) {
    OrientedGraph::Builder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) b.connect(u, v);
    return std::move(b).build();
}

std::uint64_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::uint64_t labelled_graph_count(std::size_t n) {
    const auto p = pair_count(n);
    if (p >= 64) throw Error(Errc::too_large, "graph enumeration exceeds 64-bit codes");
    return std::uint64_t{1} << p;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    Graph::Builder b(n);
    std::size_t p = 0;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v, ++p)
            if ((code >> p) & 1U) b.connect(u, v);
    return std::move(b).build();
}

std::uint64_t oriented_graph_count(std::size_t n) {
    const auto p = pair_count(n);
    if (p > 40) throw Error(Errc::too_large, "oriented enumeration exceeds 64-bit codes");
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < p; ++i) c *= 3;
    return c;
}

OrientedGraph oriented_from_code(std::size_t n, std::uint64_t code) {
    OrientedGraph::Builder b(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const auto digit = code % 3;
            code /= 3;
            if (digit == 1) b.connect(u, v);
            if (digit == 2) b.connect(v, u);
        }
    }
    return std::move(b).build();
}

std::uint64_t orientation_count(const Graph& g) {
    const auto m = g.edge_count();
    if (m >= 64) throw Error(Errc::too_large, "too many edges to enumerate orientations");
    return std::uint64_t{1} << m;
}

OrientedGraph orientation_from_code(const Graph& g, std::uint64_t code) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    OrientedGraph::Builder b(g.order());
    for (std::size_t k = 0; k < m; ++k) {
        if ((code >> (m - 1 - k)) & 1U) {
            b.connect(edges[k].v, edges[k].u);
        } else {
            b.connect(edges[k].u, edges[k].v);
        }
    }
    return std::move(b).build();
}

OrientedGraph random_orientation(const Graph& g, Rng& rng) {
    std::bernoulli_distribution flip(0.5);
    OrientedGraph::Builder b(g.order());
    for (const auto& e : g.edges()) {
        if (flip(rng)) {
            b.connect(e.v, e.u);
        } else {
            b.connect(e.u, e.v);
        }
    }
    return std::move(b).build();
}

OrientedGraph random_oriented(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> digit(0, 2);
    OrientedGraph::Builder b(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const int d = digit(rng);
            if (d == 1) b.connect(u, v);
            if (d == 2) b.connect(v, u);
        }
    }
    return std::move(b).build();
}

OrientedGraph random_dag(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution keep(p);
    OrientedGraph::Builder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (keep(rng)) b.connect(u, v);
    return std::move(b).build();
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution keep(p);
    Graph::Builder b(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (keep(rng)) b.connect(u, v);
    return std::move(b).build();
}

std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace homfull
