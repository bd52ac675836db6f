// Acceptance run: one PASS/FAIL line per criterion. With an argument only
// that criterion runs; the exit status is non-zero when any criterion fails.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homfull/harness.hpp"

using namespace homfull;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::string suite;
    std::uint64_t min_instances = 0;
    double max_seconds = 0;  // 0: no bound beyond the suite's own checks
};

HarnessConfig config() {
    HarnessConfig cfg;
    cfg.max_n = 8;
    cfg.seed = 1;
    return cfg;
}

Outcome run_checks(const std::vector<Check>& checks) {
    Outcome o;
    for (const auto& c : checks) {
        const TheoremEntry e = run_theorem(c.suite, config());
        std::ostringstream d;
        d << c.suite << " instances " << e.instances << " failures " << e.failures;
        if (e.seconds > 0) d << " seconds " << e.seconds;
        bool ok = e.passed();
        if (e.instances < c.min_instances) {
            ok = false;
            d << " (needs >= " << c.min_instances << " instances)";
        }
        if (c.max_seconds > 0 && e.seconds > c.max_seconds) {
            ok = false;
            d << " (limit " << c.max_seconds << " s)";
        }
        for (const auto& n : e.notes) d << "; " << n;
        if (!e.counterexamples.empty()) {
            std::string g = e.counterexamples.front().graph;
            std::replace(g.begin(), g.end(), '\n', ';');
            d << "; first counterexample " << e.counterexamples.front().witness << " on " << g;
        }
        o.pass = o.pass && ok;
        if (!o.detail.empty()) o.detail += " | ";
        o.detail += d.str();
    }
    return o;
}

const std::map<int, std::pair<std::string, std::vector<Check>>>& criteria() {
    static const std::map<int, std::pair<std::string, std::vector<Check>>> table{
        {1, {"five-way graph equivalence", {{"graph-equivalence", 32768, 120}}}},
        {2, {"antisymmetric equivalence", {{"antisym-equivalence", 729 + 20000}}}},
        {3, {"oriented elementary sufficiency", {{"oriented-elementary", 729 + 1000}}}},
        {4, {"pinned examples", {{"pinned-examples", 6}}}},
        {5, {"closure and core", {{"closure-core", 1000}}}},
        {6, {"oriented-clique embedding", {{"oclique-embedding", 729}}}},
        {7, {"DAG isomorphism reduction", {{"dagiso-reduction", 500}}}},
        {8, {"hom-full reduction", {{"homfull-reduction", 1}}}},
        {9, {"full-orientation reduction", {{"fullorient-reduction", 1}, {"fullorient-structure", 1}}}},
        {10, {"orientation theorem", {{"orientation-theorem", 1000}}}},
        {11, {"gadget derivation", {{"gadget-derivation", 1}, {"homfull-reduction", 1}}}},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    if (argc > 1) {
        which.push_back(std::atoi(argv[1]));
        if (!criteria().count(which.front())) {
            std::cerr << "unknown criterion " << argv[1] << '\n';
            return 2;
        }
    } else {
        for (const auto& [k, v] : criteria()) which.push_back(k);
    }
    bool all = true;
    for (int k : which) {
        const auto& [name, checks] = criteria().at(k);
        Outcome o;
        try {
            o = run_checks(checks);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << k << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail
                  << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
