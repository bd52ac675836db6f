#include <gtest/gtest.h>

#include "homfull/generators.hpp"
#include "homfull/homomorphism.hpp"
#include "homfull/iso.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace homfull;
using testing_util::gr;
using testing_util::og;

namespace {

Graph two_k2() { return gr(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST(Comparable, Examples) {
    EXPECT_TRUE(neighbourhood_comparable(cycle_graph(4), 0, 2));
    EXPECT_FALSE(neighbourhood_comparable(path_graph(4), 0, 3));
    EXPECT_FALSE(neighbourhood_comparable(directed_cycle(4), 0, 2));
    EXPECT_THROW(neighbourhood_comparable(path_graph(3), 0, 1), Error);
}

TEST(GraphRecognition, Examples) {
    EXPECT_TRUE(is_hom_full_graph(path_graph(3)));
    EXPECT_FALSE(is_hom_full_graph(path_graph(4)));
    EXPECT_FALSE(is_hom_full_graph(two_k2()));
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_TRUE(is_hom_full_graph(complete_graph(n)));
    EXPECT_TRUE(forbidden_subgraph_check(cycle_graph(4)));
    const Verdict c5 = forbidden_subgraph_check(cycle_graph(5));
    ASSERT_FALSE(c5);
    EXPECT_EQ(std::get<ForbiddenQuad>(c5.witness).shape, ForbiddenShape::p4);
    const Verdict k = forbidden_subgraph_check(two_k2());
    ASSERT_FALSE(k);
    EXPECT_EQ(std::get<ForbiddenQuad>(k.witness).shape, ForbiddenShape::two_k2);
}

TEST(GraphRecognition, CompleteMultipartiteAreHomFull) {
    // complement of disjoint cliques
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = 1; b <= 3; ++b) {
            Graph::Builder bl(a + b);
            for (VertexId x = 0; x < a; ++x)
                for (VertexId y = static_cast<VertexId>(a); y < a + b; ++y) bl.connect(x, y);
            const Graph g = std::move(bl).build();
            EXPECT_TRUE(forbidden_subgraph_check(g));
            EXPECT_TRUE(is_hom_full_graph(g));
        }
}

TEST(GraphRecognition, AgreesWithDefinitionOracle) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t c = 0; c < labelled_graph_count(n); ++c) {
            const Graph g = graph_from_code(n, c);
            const bool want = oracle::homfull_by_definition<Graph, Graph>(g, oracle::Reading::graph);
            const Verdict got = is_hom_full_graph(g);
            ASSERT_EQ(got.answer, want) << n << ' ' << c;
            if (!got) {
                const auto p = std::get<VertexPair>(got.witness);
                EXPECT_FALSE(g.adjacent(p.u, p.v));
                EXPECT_FALSE(neighbourhood_comparable(g, p.u, p.v));
            }
        }
}

TEST(QuasiTransitive, Examples) {
    EXPECT_TRUE(is_quasi_transitive(transitive_tournament(4)));
    EXPECT_TRUE(is_quasi_transitive(regular_tournament(5)));
    EXPECT_TRUE(is_quasi_transitive(directed_cycle(3)));
    const Verdict p = is_quasi_transitive(directed_path(3));
    ASSERT_FALSE(p);
    EXPECT_EQ(std::get<InducedDipath>(p.witness), (InducedDipath{0, 1, 2}));
}

TEST(AntisymRecognition, Examples) {
    EXPECT_FALSE(is_hom_full_antisym(directed_path(3)));
    EXPECT_TRUE(is_hom_full_antisym(regular_tournament(5)));
    const Verdict c4 = is_hom_full_antisym(directed_cycle(4));
    ASSERT_FALSE(c4);
    EXPECT_EQ(std::get<InducedDipath>(c4.witness), (InducedDipath{0, 1, 2}));
}

TEST(AntisymRecognition, AgreesWithDefinitionOracle) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t c = 0; c < oriented_graph_count(n); ++c) {
            const OrientedGraph g = oriented_from_code(n, c);
            const bool want = oracle::homfull_by_definition<OrientedGraph, Digraph>(g, oracle::Reading::antisym);
            ASSERT_EQ(is_hom_full_antisym(g).answer, want) << n << ' ' << c;
            EXPECT_EQ(pairwise_comparable(g).answer, want) << n << ' ' << c;
        }
}

TEST(Oclique, Examples) {
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(is_oriented_clique(bn_oclique(n)));
    EXPECT_TRUE(is_oriented_clique(directed_cycle(5)));
    const Verdict p = is_oriented_clique(directed_path(4));
    ASSERT_FALSE(p);
    EXPECT_EQ(std::get<VertexPair>(p.witness), (VertexPair{0, 3}));
}

TEST(Oclique, AgreesWithBfsOracle) {
    for (std::uint64_t c = 0; c < oriented_graph_count(4); ++c) {
        const OrientedGraph g = oriented_from_code(4, c);
        EXPECT_EQ(is_oriented_clique(g).answer, oracle::oclique(g));
        EXPECT_EQ(elementary_pairs(g).empty(), oracle::oclique(g));
    }
}

TEST(ElementaryPairs, Examples) {
    EXPECT_TRUE(elementary_pairs(directed_cycle(5)).empty());
    EXPECT_EQ(elementary_pairs(directed_path(4)), (std::vector<VertexPair>{{0, 3}}));
    EXPECT_EQ(elementary_pairs(arcless(3)), (std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(OrientedRecognition, Examples) {
    EXPECT_TRUE(is_hom_full_oriented(directed_path(3)));
    const Verdict p4 = is_hom_full_oriented(directed_path(4));
    ASSERT_FALSE(p4);
    EXPECT_EQ(std::get<VertexPair>(p4.witness), (VertexPair{0, 3}));
    EXPECT_TRUE(is_hom_full_oriented(directed_cycle(5)));
}

TEST(OrientedRecognition, AgreesWithDefinitionOracle) {
    auto check = [](const OrientedGraph& g) {
        const bool want = oracle::homfull_by_definition<OrientedGraph, OrientedGraph>(g, oracle::Reading::oriented);
        const Verdict got = is_hom_full_oriented(g);
        ASSERT_EQ(got.answer, want);
        if (got) {
            for (const auto& pe : std::get<std::vector<PairEmbedding>>(got.witness))
                EXPECT_TRUE(verify_map(oriented_identify(g, pe.pair.u, pe.pair.v), g, pe.embedding));
        }
    };
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::uint64_t c = 0; c < oriented_graph_count(n); ++c) check(oriented_from_code(n, c));
    Rng rng(3);
    for (int i = 0; i < 150; ++i) check(random_oriented(5, rng));
}

TEST(OrientedRecognition, TooLargeAboveLimit) {
    Limits small;
    small.exhaustive_order = 4;
    EXPECT_THROW(is_hom_full_oriented(arcless(5), small), Error);
}

TEST(CollapseRetraction, EmbedsWhenDominated) {
    // 0 and 1 are twins over 2
    const OrientedGraph g = og(3, {{0, 2}, {1, 2}});
    const VertexMap m = collapse_retraction(g, {0, 1}, 0);
    EXPECT_TRUE(verify_map(oriented_identify(g, 0, 1), g, m));
}
