#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "homfull/cli.hpp"
#include "homfull/io.hpp"
#include "homfull/iso.hpp"
#include "homfull/recognition.hpp"

using namespace homfull;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("homfull-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, RecognizeDirectedPath) {
    const std::string dp3 = file("dp3.txt", "oriented 3\na 0 1\na 1 2\n");
    const Result yes = call({"recognize", "--kind", "oriented", dp3, "--machine"});
    EXPECT_EQ(yes.code, kExitYes);
    EXPECT_EQ(yes.out, "VERDICT true\n");
    const Result no = call({"--machine", "recognize", "--kind", "antisym", dp3});
    EXPECT_EQ(no.code, kExitNo);
    EXPECT_EQ(no.out, "VERDICT false\nWITNESS pair 0 2\nWITNESS dipath 0 1 2\n");
}

TEST_F(Cli, RecognizeGraphWitnessIsRecheckable) {
    const std::string p4 = file("p4.txt", "graph 4\ne 0 1\ne 1 2\ne 2 3\n");
    const Result r = call({"recognize", p4, "--machine"});
    EXPECT_EQ(r.code, kExitNo);
    EXPECT_EQ(r.out, "VERDICT false\nWITNESS pair 0 3\n");
    const Graph g = std::get<Graph>(parse_file(p4));
    EXPECT_FALSE(neighbourhood_comparable(g, 0, 3));
}

TEST_F(Cli, KindMismatchIsAnError) {
    const std::string d = file("d.txt", "digraph 2\na 0 1\na 1 0\n");
    const Result r = call({"recognize", d});
    EXPECT_EQ(r.code, kExitError);
    EXPECT_NE(r.err.find("error: KindMismatch"), std::string::npos);
    const std::string g = file("g.txt", "graph 2\ne 0 1\n");
    EXPECT_EQ(call({"recognize", "--kind", "oriented", g}).code, kExitError);
}

TEST_F(Cli, ParseErrorsReportLine) {
    const std::string bad = file("bad.txt", "oriented 2\na 0 1\na 1 0\n");
    const Result r = call({"recognize", bad});
    EXPECT_EQ(r.code, kExitError);
    EXPECT_EQ(r.err, "error: DigonInOriented: line 3: oriented graphs cannot contain a digon\n");
}

TEST_F(Cli, UsageErrors) {
    const Result none = call({});
    EXPECT_EQ(none.code, kExitError);
    EXPECT_NE(none.err.find("UsageError"), std::string::npos);
    const Result missing = call({"iso", "a.txt"});
    EXPECT_EQ(missing.code, kExitError);
    EXPECT_NE(missing.err.find("Usage:"), std::string::npos);
    EXPECT_EQ(call({"recognize", "x", "--kind", "tree"}).code, kExitError);
    EXPECT_EQ(call({"gen", "nonsense", "3"}).code, kExitError);
    EXPECT_EQ(call({"--help"}).code, kExitYes);
}

TEST_F(Cli, DagisoPipeline) {
    const std::string g = file("g.txt", "oriented 3\na 0 1\na 0 2\n");
    const std::string h = file("h.txt", "oriented 3\na 2 0\na 2 1\n");
    const Result c = call({"construct", "dagiso", g, h, "-o", path("gs.txt"), "-o", path("hs.txt")});
    ASSERT_EQ(c.code, kExitYes) << c.err;
    const Result i = call({"iso", path("gs.txt"), path("hs.txt"), "--machine"});
    EXPECT_EQ(i.code, kExitYes);
    EXPECT_EQ(i.out.rfind("VERDICT true\nWITNESS map ", 0), 0u);
    std::ifstream in(path("gs.txt"));
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "# construction dagiso");

    const std::string p = file("p.txt", "oriented 3\na 0 1\na 1 2\n");
    call({"construct", "dagiso", p, "-o", path("ps.txt")});
    EXPECT_EQ(call({"iso", path("gs.txt"), path("ps.txt")}).code, kExitNo);
}

TEST_F(Cli, ConstructAndOrient) {
    const std::string k3 = file("k3.txt", "graph 3\ne 0 1\ne 0 2\ne 1 2\n");
    const Result f = call({"construct", "fullorient", k3});
    ASSERT_EQ(f.code, kExitYes);
    EXPECT_EQ(std::get<Graph>(parse_string(f.out)).edge_count(), 19u);
    const Result o = call({"orient", "oclique", k3, "-o", path("o.txt")});
    ASSERT_EQ(o.code, kExitYes);
    const Result gad = call({"orient", "gadget", k3, path("o.txt")});
    ASSERT_EQ(gad.code, kExitYes) << gad.err;
    EXPECT_TRUE(is_oriented_clique(std::get<OrientedGraph>(parse_string(gad.out))));
    const std::string p4 = file("p4.txt", "graph 4\ne 0 1\ne 1 2\ne 2 3\n");
    EXPECT_EQ(call({"orient", "oclique", p4, "--machine"}).out, "VERDICT false\n");
    EXPECT_EQ(call({"orient", "cotree", p4}).code, kExitError);
    const Result dot = call({"--format", "dot", "orient", "cotree", k3});
    EXPECT_EQ(dot.out.rfind("digraph G {", 0), 0u);
}

TEST_F(Cli, CoreClosureImagesGadget) {
    const std::string twin = file("t.txt", "oriented 4\na 0 1\na 0 2\na 1 2\na 3 1\na 3 2\n");
    const Result core = call({"core", twin});
    EXPECT_EQ(core.code, kExitYes);
    EXPECT_EQ(core.out, "# core vertices 0 1 2\noriented 3\na 0 1\na 0 2\na 1 2\n");
    const std::string dp3 = file("dp3.txt", "oriented 3\na 0 1\na 1 2\n");
    EXPECT_EQ(call({"closure", dp3}).out, "# closure\ngraph 3\ne 0 1\ne 0 2\ne 1 2\n");
    EXPECT_EQ(call({"images", "--machine", "--kind", "antisym", dp3}).out.rfind("IMAGES 2\n", 0), 0u);
    const Result j = call({"gadget", "J"});
    EXPECT_EQ(j.code, kExitYes);
    EXPECT_NE(j.out.find("# label w 4"), std::string::npos);
    EXPECT_EQ(call({"gadget", "fig1", "--quiet"}).out, "");
}

TEST_F(Cli, GenFamilies) {
    const Result bn = call({"gen", "bn", "2"});
    EXPECT_EQ(bn.out, "oriented 4\na 0 2\na 0 3\na 1 3\na 2 1\n");
    const Result a = call({"gen", "random-oriented", "6", "--seed", "5"});
    const Result b = call({"--seed", "5", "gen", "random-oriented", "6"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(call({"gen", "tournament", "4"}).code, kExitError);
}

TEST_F(Cli, VerifySingleSuite) {
    const Result r = call({"verify", "--theorem", "pinned-examples", "--no-timings", "--max-n", "5"});
    EXPECT_EQ(r.code, kExitYes);
    EXPECT_NE(r.out.find("theorem pinned-examples instances 6 failures 0 status pass"), std::string::npos);
    EXPECT_NE(r.out.find("overall pass"), std::string::npos);
    EXPECT_EQ(call({"verify", "--theorem", "nope"}).code, kExitError);
}
