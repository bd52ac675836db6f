#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "homfull/sweep.hpp"

namespace homfull {

struct Counterexample {
    /// The offending instance in the text graph format.
    std::string graph;
    std::string witness;
};

struct TheoremEntry {
    std::string id;
    std::string statement;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    /// At most kKeptCounterexamples, in instance order.
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> notes;
    double seconds = 0;
    [[nodiscard]] bool passed() const { return failures == 0; }
};

struct HarnessReport {
    std::uint64_t seed = 0;
    std::size_t max_n = 0;
    std::vector<TheoremEntry> entries;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] const TheoremEntry& entry(const std::string& id) const;
};

struct HarnessConfig {
    /// Upper bound on the order of exhaustively enumerated and sampled instances.
    std::size_t max_n = 8;
    std::uint64_t seed = 1;
    Exec exec = Exec::parallel;
};

inline constexpr std::size_t kKeptCounterexamples = 10;

/// Suite ids in run order.
const std::vector<std::string>& theorem_ids();

/// Errc::invalid_argument for an unknown id.
TheoremEntry run_theorem(const std::string& id, const HarnessConfig& config);
HarnessReport run_harness(const std::vector<std::string>& ids, const HarnessConfig& config);

/// Line-oriented report. Without timings the text depends only on the config.
void write_report(std::ostream& out, const HarnessReport& report, bool timings = true);

}  // namespace homfull
