#include "homfull/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "homfull/constructions.hpp"
#include "homfull/generators.hpp"
#include "homfull/homomorphism.hpp"
#include "homfull/io.hpp"
#include "homfull/iso.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"

namespace homfull {

namespace {

using Check = std::function<std::optional<Counterexample>(std::uint64_t)>;

Rng instance_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    return Rng(seq);
}

std::uint64_t salt_of(const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return h;
}

std::string b(bool x) { return x ? "1" : "0"; }

/// Single-line rendering for witnesses.
template <AnyGraph G>
std::string inline_text(const G& g) {
    std::string s = std::string(kind_name(G::kind)) + " " + std::to_string(g.order()) + ":";
    for (const auto& l : g.links()) s += " " + std::to_string(l.u) + (G::kind == Kind::graph ? "-" : ">") + std::to_string(l.v);
    return s;
}

template <AnyGraph G>
Counterexample counterexample(const G& g, std::string witness) {
    return {to_text(g), std::move(witness)};
}

TheoremEntry make_entry(std::string id, std::string statement) {
    TheoremEntry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    return e;
}

/// Runs `check` over [0, count) and folds the failures into the entry.
void tally(TheoremEntry& e, std::uint64_t count, const Check& check, Exec exec) {
    auto found = collect<Counterexample>(count, check, exec);
    e.instances += count;
    e.failures += found.size();
    for (auto& [i, c] : found) {
        if (e.counterexamples.size() >= kKeptCounterexamples) break;
        e.counterexamples.push_back(std::move(c));
    }
}

template <AnyGraph G>
std::vector<G> classes(std::vector<G> all) {
    std::map<CanonicalForm, G> seen;
    for (auto& g : all) {
        auto form = canonical_form(g, widened(default_limits(), g.order()));
        seen.emplace(std::move(form), std::move(g));
    }
    std::vector<G> out;
    for (auto& [form, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> graph_classes(std::size_t n) {
    std::vector<Graph> all;
    for (std::uint64_t c = 0; c < labelled_graph_count(n); ++c) all.push_back(graph_from_code(n, c));
    return classes(std::move(all));
}

std::vector<OrientedGraph> oriented_classes(std::size_t n, const std::function<bool(const OrientedGraph&)>& keep) {
    std::vector<OrientedGraph> all;
    for (std::uint64_t c = 0; c < oriented_graph_count(n); ++c) {
        auto g = oriented_from_code(n, c);
        if (keep(g)) all.push_back(std::move(g));
    }
    return classes(std::move(all));
}

/// All labelled oriented graphs for n <= min(max_n, exhaustive_n), then
/// `samples` random ones at each order in [exhaustive_n + 1, min(max_n, sample_n)].
struct OrientedInstances {
    std::vector<std::pair<std::size_t, std::uint64_t>> exhaustive;  // (n, code)
    std::vector<std::size_t> sampled;                                // order of sample i
    std::uint64_t seed = 0;
    std::uint64_t salt = 0;

    [[nodiscard]] std::uint64_t size() const { return exhaustive.size() + sampled.size(); }
    [[nodiscard]] OrientedGraph at(std::uint64_t i) const {
        if (i < exhaustive.size()) return oriented_from_code(exhaustive[i].first, exhaustive[i].second);
        const auto k = i - exhaustive.size();
        Rng rng = instance_rng(seed, salt, k);
        return random_oriented(sampled[k], rng);
    }
};

OrientedInstances oriented_instances(const HarnessConfig& cfg, const std::string& id, std::size_t exhaustive_n,
                                     std::size_t sample_n, std::uint64_t samples) {
    OrientedInstances inst;
    inst.seed = cfg.seed;
    inst.salt = salt_of(id);
    for (std::size_t n = 1; n <= std::min(cfg.max_n, exhaustive_n); ++n)
        for (std::uint64_t c = 0; c < oriented_graph_count(n); ++c) inst.exhaustive.emplace_back(n, c);
    for (std::size_t n = exhaustive_n + 1; n <= std::min(cfg.max_n, sample_n); ++n)
        for (std::uint64_t s = 0; s < samples; ++s) inst.sampled.push_back(n);
    return inst;
}

// ---------------------------------------------------------------------------

TheoremEntry graph_equivalence(const HarnessConfig& cfg) {
    auto e = make_entry("graph-equivalence", "for graphs: every non-adjacent pair comparable = no induced 2K2 or P4 = "
                                        "every image embeds = every image embeds induced = every image is a retract");
    std::vector<std::pair<std::size_t, std::uint64_t>> all;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 6); ++n)
        for (std::uint64_t c = 0; c < labelled_graph_count(n); ++c) all.emplace_back(n, c);
    tally(e, all.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const Graph g = graph_from_code(all[i].first, all[i].second);
              const bool a = is_hom_full_graph(g).answer;
              const bool f = forbidden_subgraph_check(g).answer;
              const bool d = is_hom_full_by_definition(g).answer;
              const bool ind = every_image_induced(g).answer;
              const bool r = every_image_retract(g).answer;
              if (a == f && f == d && d == ind && ind == r) return std::nullopt;
              return counterexample(g, "comparable=" + b(a) + " forbidden=" + b(f) + " definition=" + b(d) +
                                           " induced=" + b(ind) + " retract=" + b(r));
          },
          cfg.exec);
    return e;
}

TheoremEntry antisym_equivalence(const HarnessConfig& cfg) {
    auto e = make_entry("antisym-equivalence",
                   "antisymmetric reading: quasi-transitive with hom-full underlying graph = pairwise comparable = "
                   "every image (digons allowed) embeds");
    const auto inst = oriented_instances(cfg, e.id, 4, 6, 10000);
    tally(e, inst.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const OrientedGraph g = inst.at(i);
              const bool a = is_hom_full_antisym(g).answer;
              const bool p = pairwise_comparable(g).answer;
              const bool d = is_hom_full_by_definition(g, ImageSemantics::antisymmetric).answer;
              if (a == p && p == d) return std::nullopt;
              return counterexample(g, "antisym=" + b(a) + " comparable=" + b(p) + " definition=" + b(d));
          },
          cfg.exec);
    return e;
}

TheoremEntry oriented_elementary(const HarnessConfig& cfg) {
    auto e = make_entry("oriented-elementary",
                   "oriented reading: checking the elementary images decides hom-fullness");
    const auto inst = oriented_instances(cfg, e.id, 4, 5, 1000);
    tally(e, inst.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const OrientedGraph g = inst.at(i);
              const bool a = is_hom_full_oriented(g).answer;
              const bool d = is_hom_full_by_definition(g, ImageSemantics::oriented).answer;
              if (a == d) return std::nullopt;
              return counterexample(g, "elementary=" + b(a) + " definition=" + b(d));
          },
          cfg.exec);
    return e;
}

TheoremEntry pinned_examples(const HarnessConfig& cfg) {
    auto e = make_entry("pinned-examples", "directed 3-path, directed 5-cycle and directed 4-path verdicts");
    const OrientedGraph dp3 = directed_path(3);
    const OrientedGraph dc5 = directed_cycle(5);
    const OrientedGraph dp4 = directed_path(4);
    struct Pin {
        const OrientedGraph* g;
        std::string what;
        std::function<bool()> value;
        bool want;
    };
    const std::vector<Pin> pins{
        {&dp3, "hom-full oriented", [&] { return is_hom_full_oriented(dp3).answer; }, true},
        {&dp3, "hom-full antisymmetric", [&] { return is_hom_full_antisym(dp3).answer; }, false},
        {&dc5, "oriented clique", [&] { return is_oriented_clique(dc5).answer; }, true},
        {&dc5, "hom-full oriented", [&] { return is_hom_full_oriented(dc5).answer; }, true},
        {&dc5, "underlying hom-full", [&] { return is_hom_full_graph(underlying(dc5)).answer; }, false},
        {&dp4, "hom-full oriented", [&] { return is_hom_full_oriented(dp4).answer; }, false},
    };
    tally(e, pins.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const auto& p = pins[i];
              if (p.value() == p.want) return std::nullopt;
              return counterexample(*p.g, p.what + " expected " + b(p.want));
          },
          Exec::serial);
    (void)cfg;
    return e;
}

/// Arc-carrying components.
std::size_t nontrivial_components(const OrientedGraph& g) {
    std::size_t c = 0;
    for (const auto& part : components(g)) c += part.size() > 1;
    return c;
}

TheoremEntry closure_core(const HarnessConfig& cfg) {
    auto e = make_entry("closure-core",
                   "hom-full oriented graphs: closure hom-full, core an oriented clique of the minimum image order, "
                   "at most one nontrivial component; closure of a quotient contains the quotient of the closure");
    const auto inst = oriented_instances(cfg, "oriented-elementary", 4, 5, 1000);
    tally(e, inst.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const OrientedGraph g = inst.at(i);
              if (!is_hom_full_oriented(g)) return std::nullopt;
              if (!is_hom_full_graph(closure(g))) return counterexample(g, "closure not hom-full");
              const OrientedGraph core = oriented_core(g);
              if (!is_oriented_clique(core)) return counterexample(g, "core not an oriented clique");
              if (core.order() != minimum_image(g).order()) return counterexample(g, "core order differs from minimum image");
              if (nontrivial_components(g) > 1) return counterexample(g, "two nontrivial components");
              return std::nullopt;
          },
          cfg.exec);

    const std::size_t top = std::min<std::size_t>(cfg.max_n, 8);
    if (top >= 2) {
        const auto salt = salt_of(e.id);
        tally(e, 1000,
              [&](std::uint64_t i) -> std::optional<Counterexample> {
                  Rng rng = instance_rng(cfg.seed, salt, i);
                  std::uniform_int_distribution<std::size_t> order(2, top);
                  const OrientedGraph g = random_oriented(order(rng), rng);
                  const Graph cl = closure(g);
                  for (const auto& p : elementary_pairs(g)) {
                      const Graph lhs = identify(cl, p.u, p.v);
                      const Graph rhs = closure(oriented_identify(g, p.u, p.v));
                      for (const auto& l : lhs.edges())
                          if (!rhs.adjacent(l.u, l.v))
                              return counterexample(g, "pair " + std::to_string(p.u) + " " + std::to_string(p.v) +
                                                           " loses edge " + std::to_string(l.u) + " " + std::to_string(l.v));
                  }
                  return std::nullopt;
              },
              cfg.exec);
    }
    return e;
}

TheoremEntry oclique_embedding(const HarnessConfig& cfg) {
    auto e = make_entry("oclique-embedding", "every oriented graph is an induced subgraph of an oriented clique");
    const auto inst = oriented_instances(cfg, e.id, 4, 5, 1000);
    tally(e, inst.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const OrientedGraph g = inst.at(i);
              const auto [host, map] = embed_in_oclique(g);
              if (!is_oriented_clique(host)) return counterexample(g, "host not an oriented clique");
              if (!verify_map(g, host, map)) return counterexample(g, "returned map is not an induced embedding");
              return std::nullopt;
          },
          cfg.exec);
    return e;
}

std::optional<std::string> dagiso_degrees(const OrientedGraph& g, const ReductionInstance<OrientedGraph>& r) {
    const std::size_t n = g.order();
    if (r.output.order() != 4 * n + 1) return "wrong order";
    for (VertexId i = 0; i < n; ++i) {
        if (r.output.out_degree(r.map("L").targets[i]) != g.out_degree(i) + 2 * n + 2) return "L out-degree";
        if (r.output.out_degree(r.map("R").targets[i]) != g.out_degree(i) + n - 1) return "R out-degree";
    }
    for (VertexId t : r.map("T").targets)
        if (r.output.out_degree(t) != 2 * n) return "T out-degree";
    return std::nullopt;
}

TheoremEntry dagiso_reduction(const HarnessConfig& cfg) {
    auto e = make_entry("dagiso-reduction", "DAGs G, H are isomorphic iff their oriented-clique gadgets are");
    std::vector<std::pair<OrientedGraph, OrientedGraph>> pairs;
    const auto salt = salt_of(e.id);
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 4); ++n) {
        const auto dags = oriented_classes(n, [](const OrientedGraph& g) { return is_acyclic(g); });
        for (std::size_t i = 0; i < dags.size(); ++i) {
            Rng rng = instance_rng(cfg.seed, salt, pairs.size());
            const auto perm = random_permutation(n, rng);
            pairs.emplace_back(dags[i], relabel(dags[i], std::span<const VertexId>(perm)));
            for (std::size_t k = i + 1; k < dags.size(); ++k) pairs.emplace_back(dags[i], dags[k]);
        }
    }
    const std::uint64_t fixed = pairs.size();
    const std::uint64_t sampled = cfg.max_n >= 5 ? 500 : 0;
    tally(e, fixed + sampled,
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              OrientedGraph g;
              OrientedGraph h;
              if (i < fixed) {
                  g = pairs[i].first;
                  h = pairs[i].second;
              } else {
                  Rng rng = instance_rng(cfg.seed, salt ^ 0x5bd1e995, i - fixed);
                  std::uniform_real_distribution<double> dens(0.2, 0.8);
                  g = random_dag(5, dens(rng), rng);
                  if ((i - fixed) % 2 == 0) {
                      const auto perm = random_permutation(5, rng);
                      h = relabel(g, std::span<const VertexId>(perm));
                  } else {
                      h = random_dag(5, dens(rng), rng);
                  }
              }
              const auto gs = dagiso_gadget(g);
              const auto hs = dagiso_gadget(h);
              if (auto bad = dagiso_degrees(g, gs)) return counterexample(g, *bad);
              if (auto bad = dagiso_degrees(h, hs)) return counterexample(h, *bad);
              const bool base = are_isomorphic(g, h).has_value();
              const bool lifted = are_isomorphic(gs.output, hs.output).has_value();
              if (base == lifted) return std::nullopt;
              return counterexample(g, "partner " + inline_text(h) + " isomorphic=" + b(base) + " gadgets isomorphic=" + b(lifted));
          },
          cfg.exec);
    return e;
}

TheoremEntry homfull_reduction(const HarnessConfig& cfg) {
    auto e = make_entry("homfull-reduction",
                   "oriented cliques G1, G2 are isomorphic iff the gadget is hom-full; then its core has |G1|+2|G2|+4 vertices");
    std::vector<OrientedGraph> ocl;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 4); ++n)
        for (auto& g : oriented_classes(n, [](const OrientedGraph& g) { return is_oriented_clique(g).answer; }))
            ocl.push_back(std::move(g));
    const std::uint64_t k = ocl.size();
    tally(e, k * k,
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const OrientedGraph& g1 = ocl[i / k];
              const OrientedGraph& g2 = ocl[i % k];
              const auto r = homfull_gadget(g1, g2);
              const Limits lim = widened(default_limits(), r.output.order());
              const bool iso = are_isomorphic(g1, g2).has_value();
              const bool full = is_hom_full_oriented(r.output, lim).answer;
              if (iso != full) return counterexample(r.output, "isomorphic=" + b(iso) + " hom-full=" + b(full));
              if (iso) {
                  const auto core = oriented_core_vertices(r.output, lim).size();
                  const auto want = g1.order() + 2 * g2.order() + 4;
                  if (core != want)
                      return counterexample(r.output, "core order " + std::to_string(core) + " expected " + std::to_string(want));
              }
              return std::nullopt;
          },
          cfg.exec);
    return e;
}

/// Whether the gadget of gamma has a hom-full orientation, when decidable:
/// by the comparability shortcut when its premise holds, by enumeration when
/// small enough, and "yes" when an oriented-clique orientation exists.
std::optional<bool> fullorient_decision(const Graph& gadget) {
    if (no_comparable_pairs(gadget)) return has_oclique_orientation(gadget).has_value();
    if (gadget.edge_count() <= default_limits().homfull_orientation_edges)
        return homfull_orientation_exhaustive(gadget, Exec::serial).has_value();
    if (has_oclique_orientation(gadget)) return true;
    return std::nullopt;
}

TheoremEntry fullorient_reduction(const HarnessConfig& cfg) {
    auto e = make_entry("fullorient-reduction",
                   "a graph has an oriented-clique orientation iff its gadget has a hom-full orientation");
    std::vector<Graph> all;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 5); ++n)
        for (auto& g : graph_classes(n)) all.push_back(std::move(g));
    tally(e, all.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const Graph& gamma = all[i];
              const auto r = fullorient_gadget(gamma);
              if (r.output.order() != 2 * gamma.order() + 2) return counterexample(gamma, "gadget order");
              const auto left = has_oclique_orientation(gamma);
              if (left) {
                  const OrientedGraph o = orient_gadget(gamma, *left);
                  if (!is_oriented_clique(o)) return counterexample(gamma, "oriented gadget not an oriented clique");
              }
              const auto right = fullorient_decision(r.output);
              if (!right) return counterexample(gamma, "oclique=" + b(left.has_value()) + " gadget undecided");
              if (*right != left.has_value())
                  return counterexample(gamma, "oclique=" + b(left.has_value()) + " gadget hom-full orientation=" + b(*right));
              return std::nullopt;
          },
          cfg.exec);
    return e;
}

TheoremEntry fullorient_structure_suite(const HarnessConfig& cfg) {
    auto e = make_entry("fullorient-structure", "no two non-adjacent vertices of the gadget are neighbourhood comparable");
    std::vector<Graph> all;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 6); ++n)
        for (auto& g : graph_classes(n)) all.push_back(std::move(g));
    const std::uint64_t fixed = all.size();
    std::vector<std::size_t> sampled;
    for (std::size_t n = 7; n <= std::min<std::size_t>(cfg.max_n, 8); ++n)
        for (int s = 0; s < 500; ++s) sampled.push_back(n);
    const auto salt = salt_of(e.id);
    tally(e, fixed + sampled.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              Graph gamma;
              if (i < fixed) {
                  gamma = all[i];
              } else {
                  Rng rng = instance_rng(cfg.seed, salt, i - fixed);
                  gamma = random_graph(sampled[i - fixed], 0.5, rng);
              }
              const auto r = fullorient_gadget(gamma);
              const auto& g = r.output;
              for (VertexId u = 0; u < g.order(); ++u)
                  for (VertexId v = u + 1; v < g.order(); ++v)
                      if (!g.adjacent(u, v) && neighbourhood_comparable(g, u, v))
                          return counterexample(gamma, "gadget vertices " + std::to_string(u) + " " + std::to_string(v) +
                                                           " comparable");
              return std::nullopt;
          },
          cfg.exec);
    return e;
}

TheoremEntry fullorient_shortcut(const HarnessConfig& cfg) {
    auto e = make_entry("fullorient-shortcut",
                   "graphs without comparable pairs: first hom-full orientation = first oriented-clique orientation");
    std::vector<Graph> all;
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 6); ++n)
        for (auto& g : graph_classes(n))
            if (no_comparable_pairs(g) && g.edge_count() <= default_limits().homfull_orientation_edges)
                all.push_back(std::move(g));
    tally(e, all.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              const auto fast = has_oclique_orientation(all[i]);
              const auto slow = homfull_orientation_exhaustive(all[i], Exec::serial);
              if (fast.has_value() == slow.has_value() && (!fast || fast->arcs() == slow->arcs())) return std::nullopt;
              return counterexample(all[i], "oclique=" + b(fast.has_value()) + " exhaustive=" + b(slow.has_value()));
          },
          cfg.exec);
    return e;
}

TheoremEntry orientation_theorem(const HarnessConfig& cfg) {
    auto e = make_entry("orientation-theorem",
                   "every orientation of a hom-full graph is hom-full; the cotree orientation is hom-full antisymmetric");
    std::vector<std::pair<Graph, std::uint64_t>> all;  // (graph, orientation code)
    for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.max_n, 5); ++n)
        for (auto& g : graph_classes(n))
            if (is_hom_full_graph(g))
                for (std::uint64_t c = 0; c < orientation_count(g); ++c) all.emplace_back(g, c);
    const std::uint64_t fixed = all.size();
    const std::size_t top = std::min<std::size_t>(cfg.max_n, 8);
    const std::uint64_t sampled = top >= 1 ? 1000 : 0;
    const auto salt = salt_of(e.id);
    tally(e, fixed + sampled,
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              OrientedGraph o;
              if (i < fixed) {
                  o = orientation_from_code(all[i].first, all[i].second);
              } else {
                  Rng rng = instance_rng(cfg.seed, salt, i - fixed);
                  std::uniform_int_distribution<std::size_t> order(1, top);
                  const Graph g = homfull_graph_generator(order(rng), rng());
                  o = random_orientation(g, rng);
              }
              if (is_hom_full_oriented(o)) return std::nullopt;
              return counterexample(o, "orientation not hom-full");
          },
          cfg.exec);

    const auto qsalt = salt ^ 0x27d4eb2f165667c5ULL;
    tally(e, 50,
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              Rng rng = instance_rng(cfg.seed, qsalt, i);
              const Graph g = homfull_graph_generator(i + 1, rng());
              const auto t0 = std::chrono::steady_clock::now();
              const OrientedGraph o = quasi_transitive_orientation(g);
              const bool ok = underlying(o).edges() == g.edges() && is_quasi_transitive(o).answer &&
                              is_hom_full_antisym(o).answer;
              const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
              if (!ok) return counterexample(g, "cotree orientation not hom-full antisymmetric");
              if (s >= 1.0) return counterexample(g, "cotree orientation took " + std::to_string(s) + " s");
              return std::nullopt;
          },
          cfg.exec);
    return e;
}

TheoremEntry gadget_derivation(const HarnessConfig& cfg) {
    auto e = make_entry("gadget-derivation", "the gadget J and the fixture are found by search and satisfy their invariants");
    (void)cfg;
    const auto t0 = std::chrono::steady_clock::now();
    const GadgetJ& j = derive_gadget_J();
    const double tj = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Fig1Fixture& f = derive_fig1_fixture();
    const double tf = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() - tj;
    e.notes.push_back("gadget J has " + std::to_string(j.graph.order()) + " vertices");
    e.notes.push_back("fixture has " + std::to_string(f.graph.order()) + " vertices");
    const OrientedGraph k1 = arcless(1);
    const OrientedGraph arc = directed_path(2);
    const std::vector<std::pair<std::string, std::function<bool()>>> checks{
        {"gadget invariants", [&] { return satisfies_gadget_invariants(j); }},
        {"gadget found within a minute", [&] { return tj < 60; }},
        {"fixture invariants", [&] { return satisfies_fixture_invariants(f); }},
        {"fixture found within a minute", [&] { return tf < 60; }},
        {"gadget on equal inputs hom-full",
         [&] {
             const auto r = homfull_gadget(k1, k1, j);
             return is_hom_full_oriented(r.output, widened(default_limits(), r.output.order())).answer;
         }},
        {"gadget on different inputs not hom-full",
         [&] {
             const auto r = homfull_gadget(k1, arc, j);
             return !is_hom_full_oriented(r.output, widened(default_limits(), r.output.order())).answer;
         }},
    };
    tally(e, checks.size(),
          [&](std::uint64_t i) -> std::optional<Counterexample> {
              if (checks[i].second()) return std::nullopt;
              return counterexample(i < 2 ? j.graph : f.graph, checks[i].first + " failed");
          },
          Exec::serial);
    return e;
}

const std::vector<std::pair<std::string, TheoremEntry (*)(const HarnessConfig&)>>& suites() {
    static const std::vector<std::pair<std::string, TheoremEntry (*)(const HarnessConfig&)>> table{
        {"graph-equivalence", graph_equivalence},
        {"antisym-equivalence", antisym_equivalence},
        {"oriented-elementary", oriented_elementary},
        {"pinned-examples", pinned_examples},
        {"closure-core", closure_core},
        {"oclique-embedding", oclique_embedding},
        {"dagiso-reduction", dagiso_reduction},
        {"gadget-derivation", gadget_derivation},
        {"homfull-reduction", homfull_reduction},
        {"fullorient-reduction", fullorient_reduction},
        {"fullorient-structure", fullorient_structure_suite},
        {"fullorient-shortcut", fullorient_shortcut},
        {"orientation-theorem", orientation_theorem},
    };
    return table;
}

}  // namespace

bool HarnessReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const TheoremEntry& e) { return e.passed(); });
}

const TheoremEntry& HarnessReport::entry(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw Error(Errc::invalid_argument, "no entry " + id);
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : suites()) v.push_back(id);
        return v;
    }();
    return ids;
}

TheoremEntry run_theorem(const std::string& id, const HarnessConfig& config) {
    for (const auto& [name, fn] : suites()) {
        if (name != id) continue;
        const auto t0 = std::chrono::steady_clock::now();
        TheoremEntry e = fn(config);
        e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return e;
    }
    throw Error(Errc::invalid_argument, "unknown theorem '" + id + "'");
}

HarnessReport run_harness(const std::vector<std::string>& ids, const HarnessConfig& config) {
    HarnessReport r{config.seed, config.max_n, {}};
    for (const auto& id : ids) r.entries.push_back(run_theorem(id, config));
    return r;
}

void write_report(std::ostream& out, const HarnessReport& report, bool timings) {
    out << "harness seed " << report.seed << " max-n " << report.max_n << '\n';
    for (const auto& e : report.entries) {
        out << "theorem " << e.id << " instances " << e.instances << " failures " << e.failures << " status "
            << (e.passed() ? "pass" : "fail");
        if (timings) {
            std::ostringstream s;
            s.precision(3);
            s << std::fixed << e.seconds;
            out << " seconds " << s.str();
        }
        out << '\n';
        out << "statement " << e.id << ' ' << e.statement << '\n';
        for (const auto& n : e.notes) out << "note " << e.id << ' ' << n << '\n';
        for (const auto& c : e.counterexamples) {
            out << "counterexample " << e.id << ' ' << c.witness << '\n';
            std::istringstream lines(c.graph);
            for (std::string line; std::getline(lines, line);) out << "| " << line << '\n';
        }
    }
    out << "overall " << (report.passed() ? "pass" : "fail") << '\n';
}

}  // namespace homfull
