#include <gtest/gtest.h>

#include "homfull/generators.hpp"
#include "homfull/homomorphism.hpp"
#include "homfull/iso.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace homfull;
using testing_util::dg;
using testing_util::gr;
using testing_util::og;

TEST(Partitions, BellNumbersOnEdgeless) {
    std::size_t count = 0;
    for_each_valid_partition(empty_graph(5), [&](const BlockAssignment&) { ++count; });
    EXPECT_EQ(count, 52u);
    count = 0;
    for_each_valid_partition(complete_graph(4), [&](const BlockAssignment& b) {
        EXPECT_EQ(b.blocks, 4u);
        ++count;
    });
    EXPECT_EQ(count, 1u);
}

TEST(Images, Examples) {
    const auto o = oriented_images(directed_path(3));
    ASSERT_EQ(o.size(), 1u);
    EXPECT_EQ(o[0].graph, directed_path(3));
    const auto a = antisymmetric_images(directed_path(3));
    ASSERT_EQ(a.size(), 2u);
    // sorted by order: the digon first
    EXPECT_TRUE(are_isomorphic(a[0].graph, dg(2, {{0, 1}, {1, 0}})));
    EXPECT_TRUE(are_isomorphic(a[1].graph, dg(3, {{0, 1}, {1, 2}})));
    EXPECT_EQ(graph_images(complete_graph(2)).size(), 1u);
}

TEST(Images, CountsMatchBruteForce) {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng() % 5;
        const OrientedGraph g = random_oriented(n, rng);
        EXPECT_EQ(oriented_images(g).size(), (oracle::images<OrientedGraph, OrientedGraph>(g, oracle::Reading::oriented).size()));
        EXPECT_EQ(antisymmetric_images(g).size(), (oracle::images<OrientedGraph, Digraph>(g, oracle::Reading::antisym).size()));
        const Graph u = random_graph(n, 0.4, rng);
        EXPECT_EQ(graph_images(u).size(), (oracle::images<Graph, Graph>(u, oracle::Reading::graph).size()));
    }
}

TEST(Definition, Examples) {
    EXPECT_FALSE(is_hom_full_by_definition(directed_path(3), ImageSemantics::antisymmetric));
    EXPECT_TRUE(is_hom_full_by_definition(directed_path(3), ImageSemantics::oriented));
    EXPECT_TRUE(is_hom_full_by_definition(path_graph(3)));
    EXPECT_TRUE(is_hom_full_by_definition(directed_cycle(5), ImageSemantics::oriented));
    EXPECT_EQ(oriented_images(directed_cycle(5)).size(), 1u);
}

TEST(Definition, GraphOraclesAgree) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t c = 0; c < labelled_graph_count(n); ++c) {
            const Graph g = graph_from_code(n, c);
            const bool want = is_hom_full_graph(g).answer;
            ASSERT_EQ(is_hom_full_by_definition(g).answer, want) << n << ' ' << c;
            ASSERT_EQ(every_image_induced(g).answer, want) << n << ' ' << c;
            ASSERT_EQ(every_image_retract(g).answer, want) << n << ' ' << c;
        }
}

TEST(HomExists, Examples) {
    EXPECT_TRUE(hom_exists(directed_path(3), transitive_tournament(3)));
    EXPECT_FALSE(hom_exists(directed_cycle(3), directed_path(4)));
    const auto id = hom_exists(directed_cycle(5), directed_cycle(5));
    ASSERT_TRUE(id);
}

TEST(HomExists, AgreesWithBruteForce) {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        const OrientedGraph g = random_oriented(1 + rng() % 5, rng);
        const OrientedGraph h = random_oriented(1 + rng() % 4, rng);
        const auto got = hom_exists(g, h);
        EXPECT_EQ(got.has_value(), oracle::hom(g, h).has_value());
        if (got) {
            for (const auto& a : g.arcs()) EXPECT_TRUE(h.has_arc((*got)[a.u], (*got)[a.v]));
        }
    }
}

TEST(MinimumImage, Examples) {
    EXPECT_EQ(minimum_image(directed_path(3)), directed_path(3));
    EXPECT_EQ(minimum_image(arcless(4)).order(), 1u);
    EXPECT_TRUE(are_isomorphic(minimum_image(og(4, {{0, 1}, {2, 3}})), og(2, {{0, 1}})));
}

TEST(Core, Examples) {
    EXPECT_EQ(oriented_core(directed_path(3)), directed_path(3));
    // transitive triple with the source duplicated
    const OrientedGraph twin = og(4, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}});
    EXPECT_TRUE(are_isomorphic(oriented_core(twin), transitive_tournament(3)));
    EXPECT_EQ(oriented_core_vertices(twin), (std::vector<VertexId>{0, 1, 2}));
    EXPECT_EQ(oriented_core(arcless(1)).order(), 1u);
}

TEST(Core, OrderMatchesSubsetDefinition) {
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        const OrientedGraph g = random_oriented(1 + rng() % 6, rng);
        const auto vs = oriented_core_vertices(g);
        ASSERT_EQ(vs.size(), oracle::core_order(g));
        const OrientedGraph core = induced_subgraph(g, std::span<const VertexId>(vs));
        EXPECT_TRUE(oracle::hom(g, core).has_value());
    }
}

TEST(Core, OfHomFullGraphIsOclique) {
    for (std::uint64_t c = 0; c < oriented_graph_count(4); ++c) {
        const OrientedGraph g = oriented_from_code(4, c);
        if (!is_hom_full_oriented(g)) continue;
        EXPECT_TRUE(oracle::oclique(oriented_core(g))) << c;
    }
}
