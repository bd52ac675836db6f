#include <gtest/gtest.h>

#include <sstream>

#include "homfull/constructions.hpp"
#include "homfull/harness.hpp"
#include "homfull/io.hpp"

using namespace homfull;

namespace {

std::string report_text(const std::vector<std::string>& ids, HarnessConfig cfg) {
    std::ostringstream out;
    write_report(out, run_harness(ids, cfg), false);
    return out.str();
}

}  // namespace

TEST(Harness, KnownIds) {
    const auto& ids = theorem_ids();
    EXPECT_EQ(ids.size(), 13u);
    EXPECT_EQ(ids.front(), "graph-equivalence");
    EXPECT_THROW(run_theorem("no-such-suite", {}), Error);
}

TEST(Harness, DeterministicForFixedSeed) {
    const std::vector<std::string> ids{"antisym-equivalence", "dagiso-reduction", "closure-core"};
    HarnessConfig cfg;
    cfg.max_n = 6;
    cfg.seed = 42;
    const std::string a = report_text(ids, cfg);
    EXPECT_EQ(a, report_text(ids, cfg));
    cfg.exec = Exec::serial;
    EXPECT_EQ(a, report_text(ids, cfg));
    cfg.seed = 43;
    cfg.exec = Exec::parallel;
    EXPECT_EQ(report_text(ids, cfg).find("harness seed 43"), 0u);
}

TEST(Harness, ReportFormat) {
    HarnessConfig cfg;
    cfg.max_n = 5;
    const std::string text = report_text({"pinned-examples"}, cfg);
    EXPECT_EQ(text.rfind("harness seed 1 max-n 5\n", 0), 0u);
    EXPECT_NE(text.find("theorem pinned-examples instances 6 failures 0 status pass\n"), std::string::npos);
    EXPECT_NE(text.find("overall pass\n"), std::string::npos);
}

// Failures of the gadget equivalence re-verify from the serialized graph.
TEST(Harness, CounterexamplesReverify) {
    HarnessConfig cfg;
    cfg.max_n = 5;
    const TheoremEntry e = run_theorem("fullorient-reduction", cfg);
    ASSERT_GT(e.failures, 0u);
    EXPECT_LE(e.counterexamples.size(), kKeptCounterexamples);
    for (const auto& c : e.counterexamples) {
        const Graph gamma = std::get<Graph>(parse_string(c.graph));
        const Graph gadget = fullorient_gadget(gamma).output;
        EXPECT_FALSE(has_oclique_orientation(gamma).has_value()) << c.graph;
        EXPECT_FALSE(no_comparable_pairs(gadget)) << c.graph;
        if (gadget.edge_count() <= default_limits().homfull_orientation_edges) {
            EXPECT_TRUE(homfull_orientation_exhaustive(gadget, Exec::serial).has_value()) << c.graph;
        }
    }
}

TEST(Harness, PassingEntriesHaveNoCounterexamples) {
    HarnessConfig cfg;
    cfg.max_n = 5;
    const HarnessReport r = run_harness({"oriented-elementary", "oclique-embedding", "fullorient-shortcut"}, cfg);
    for (const auto& e : r.entries) {
        EXPECT_TRUE(e.passed()) << e.id;
        EXPECT_TRUE(e.counterexamples.empty()) << e.id;
        EXPECT_GT(e.instances, 0u) << e.id;
    }
    EXPECT_EQ(&r.entry("oclique-embedding"), &r.entries[1]);
}
