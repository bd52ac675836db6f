#include <gtest/gtest.h>

#include "homfull/error.hpp"
#include "homfull/generators.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace homfull;
using testing_util::dg;
using testing_util::gr;
using testing_util::og;

namespace {

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::invalid_argument;
}

}  // namespace

TEST(VertexSet, BasicOps) {
    VertexSet s = VertexSet::range(70);
    EXPECT_EQ(s.size(), 70u);
    EXPECT_TRUE(s.contains(69));
    EXPECT_FALSE(s.contains(70));
    s.erase(3);
    EXPECT_EQ(s.first(), 0u);
    EXPECT_EQ(s.next_from(3), 4u);
    VertexSet t = VertexSet::single(127);
    EXPECT_FALSE(s.intersects(t));
    EXPECT_TRUE(VertexSet::single(5).is_subset_of(s));
    std::vector<VertexId> seen(t.begin(), t.end());
    EXPECT_EQ(seen, std::vector<VertexId>{127});
}

TEST(Builders, RejectBadInput) {
    EXPECT_EQ(code_of([] { gr(2, {{0, 0}}); }), Errc::loop_edge);
    EXPECT_EQ(code_of([] { gr(2, {{0, 2}}); }), Errc::index_out_of_range);
    EXPECT_EQ(code_of([] { og(2, {{0, 1}, {1, 0}}); }), Errc::digon_in_oriented);
    EXPECT_EQ(code_of([] { Graph g(kMaxOrder + 1); }), Errc::too_large);
    const std::vector<Link> twice{{0, 1}, {0, 1}};
    EXPECT_EQ(code_of([&] { OrientedGraph::from_arcs(2, twice); }), Errc::duplicate_edge);
    EXPECT_EQ(dg(2, {{0, 1}, {1, 0}}).arc_count(), 2u);
}

TEST(Underlying, Examples) {
    EXPECT_EQ(underlying(directed_path(3)), path_graph(3));
    EXPECT_EQ(underlying(og(2, {{0, 1}})), gr(2, {{0, 1}}));
    const Graph k33 = underlying(bn_oclique(3));
    EXPECT_EQ(k33.edge_count(), 9u);
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b) EXPECT_TRUE(k33.adjacent(a, b));
}

TEST(Identify, Examples) {
    EXPECT_EQ(identify(path_graph(3), 0, 2), gr(2, {{0, 1}}));
    EXPECT_EQ(identify(directed_path(3), 0, 2), dg(2, {{0, 1}, {1, 0}}));
    EXPECT_EQ(code_of([] { identify(path_graph(3), 0, 1); }), Errc::adjacent_pair);
    EXPECT_EQ(oriented_identify(directed_path(4), 0, 3), og(3, {{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_EQ(code_of([] { oriented_identify(directed_path(3), 0, 2); }), Errc::two_dipath);
    EXPECT_EQ(oriented_identify(og(4, {{0, 1}, {2, 3}}), 0, 2), og(3, {{0, 1}, {0, 2}}));
}

TEST(Identify, ReindexingKeepsMinDropsMax) {
    const IdentificationMap m = identification_map(4, 1);
    EXPECT_EQ(m.keep, 1u);
    EXPECT_EQ(m.drop, 4u);
    EXPECT_EQ(m(4), 1u);
    EXPECT_EQ(m(2), 2u);
    EXPECT_EQ(m(5), 4u);
    // symmetric in the pair
    const Graph g = path_graph(5);
    EXPECT_EQ(identify(g, 0, 4), identify(g, 4, 0));
}

TEST(Closure, Examples) {
    EXPECT_EQ(closure(directed_path(3)), complete_graph(3));
    EXPECT_EQ(closure(bn_oclique(3)), complete_graph(6));
    EXPECT_EQ(closure(arcless(3)), empty_graph(3));
}

TEST(Closure, MatchesBfsOracle) {
    for (std::uint64_t code = 0; code < oriented_graph_count(4); ++code) {
        const OrientedGraph g = oriented_from_code(4, code);
        EXPECT_EQ(closure(g), oracle::closure(g)) << code;
    }
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const OrientedGraph g = random_oriented(7, rng);
        EXPECT_EQ(closure(g), oracle::closure(g));
    }
}

TEST(DirectedDistance, Examples) {
    const OrientedGraph c5 = directed_cycle(5);
    EXPECT_EQ(directed_distance(c5, 0, 3), 3u);
    EXPECT_EQ(directed_distance(c5, 3, 0), 2u);
    EXPECT_EQ(directed_distance(c5, 2, 2), 0u);
    EXPECT_FALSE(directed_distance(arcless(2), 0, 1).has_value());
}

TEST(Tournaments, Examples) {
    EXPECT_EQ(regular_tournament(1).order(), 1u);
    EXPECT_EQ(regular_tournament(1).arc_count(), 0u);
    EXPECT_TRUE(oracle::iso(regular_tournament(3), directed_cycle(3)).has_value());
    const OrientedGraph t5 = regular_tournament(5);
    for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(t5.out_degree(v), 2u);
    EXPECT_EQ(code_of([] { regular_tournament(4); }), Errc::even_order);
}

TEST(BnOclique, Examples) {
    EXPECT_EQ(bn_oclique(1), og(2, {{0, 1}}));
    EXPECT_EQ(bn_oclique(2), og(4, {{0, 2}, {0, 3}, {1, 3}, {2, 1}}));
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(oracle::oclique(bn_oclique(n))) << n;
}

TEST(Generator, ForestExamples) {
    EXPECT_EQ(forest_cocomparability({std::nullopt, std::nullopt}), complete_graph(2));
    EXPECT_EQ(forest_cocomparability({std::nullopt, 0u, 1u}), empty_graph(3));
}

TEST(Generator, OutputsAreHomFull) {
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        for (std::size_t n = 1; n <= 8; ++n)
            EXPECT_TRUE(is_hom_full_graph(homfull_graph_generator(n, seed)).answer) << n << ' ' << seed;
}

TEST(Enumeration, CountsAndDistinctness) {
    EXPECT_EQ(labelled_graph_count(6), 32768u);
    EXPECT_EQ(oriented_graph_count(4), 729u);
    std::set<oracle::LinkSet> seen;
    for (std::uint64_t c = 0; c < oriented_graph_count(3); ++c) seen.insert(oracle::links(oriented_from_code(3, c)));
    EXPECT_EQ(seen.size(), 27u);
    const Graph c4 = cycle_graph(4);
    EXPECT_EQ(orientation_count(c4), 16u);
    std::set<oracle::LinkSet> orient;
    for (std::uint64_t c = 0; c < 16; ++c) {
        const OrientedGraph o = orientation_from_code(c4, c);
        EXPECT_EQ(underlying(o), c4);
        orient.insert(oracle::links(o));
    }
    EXPECT_EQ(orient.size(), 16u);
}

TEST(Operators, ComponentsAndAcyclic) {
    EXPECT_EQ(components(gr(5, {{0, 1}, {3, 4}})).size(), 3u);
    EXPECT_EQ(components(og(4, {{0, 1}, {2, 3}})).size(), 2u);
    EXPECT_TRUE(is_acyclic(directed_path(5)));
    EXPECT_FALSE(is_acyclic(directed_cycle(3)));
    EXPECT_EQ(complement(path_graph(4)), gr(4, {{0, 2}, {0, 3}, {1, 3}}));
    const OrientedGraph g = delete_vertex(directed_path(4), 1);
    EXPECT_EQ(g, og(3, {{1, 2}}));
    EXPECT_EQ(delete_link(directed_path(3), 0, 1), og(3, {{1, 2}}));
    const std::vector<VertexId> perm{2, 0, 1};
    EXPECT_EQ(relabel(directed_path(3), perm), og(3, {{2, 0}, {0, 1}}));
}
