#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homfull/graph.hpp"
#include "homfull/iso.hpp"
#include "homfull/limits.hpp"
#include "homfull/sweep.hpp"
#include "homfull/verdict.hpp"

namespace homfull {

/// Where the vertices of one named input part landed in a construction.
struct IndexMap {
    std::string label;
    std::vector<VertexId> targets;
    friend bool operator==(const IndexMap&, const IndexMap&) = default;
};

template <AnyGraph G>
struct ReductionInstance {
    std::string construction;
    G output;
    std::vector<IndexMap> maps;

    [[nodiscard]] const IndexMap& map(const std::string& label) const {
        for (const auto& m : maps)
            if (m.label == label) return m;
        throw Error(Errc::invalid_argument, "no index map labelled " + label);
    }
};

/// B_n with the arcs of g copied onto the a-side; g sits on vertices 0..n-1.
std::pair<OrientedGraph, VertexMap> embed_in_oclique(const OrientedGraph& g);

/// G* on 4n+1 vertices: maps "L" (0..n-1), "R" (n..2n-1), "T" (2n..4n).
/// Errc::not_acyclic unless g is a DAG.
ReductionInstance<OrientedGraph> dagiso_gadget(const OrientedGraph& g);

/// The five-vertex gadget J with its labelled vertices.
struct GadgetJ {
    OrientedGraph graph;
    VertexId u = 0;
    VertexId u_prime = 1;
    VertexId v = 2;
    VertexId v_prime = 3;
    VertexId w = 4;
};

/// Structural invariants of a gadget candidate (not the behavioural
/// validation): u, u' elementary with u' not dominated by u; v' dominated by
/// v; identifying u with u' gives J - v'; J hom-full.
bool satisfies_gadget_invariants(const GadgetJ& j, const Limits& limits = default_limits());

/// First oriented graph (digit vectors over vertex pairs in lexicographic
/// order, first pair most significant) on 5, then 6 vertices with labels
/// u, u', v, v', w = 0..4 that satisfies the gadget invariants and behaves
/// correctly inside homfull_gadget. Cached. Errc::no_gadget_found if none.
const GadgetJ& derive_gadget_J();

/// Hom-full oriented graph with arc x -> u' whose only elementary pairs are
/// (u, u') and (v, v'): v, v' comparable, u, u' not, and deleting v' and the
/// arc x -> u' gives the (u, u') quotient with one degree-2 vertex on each
/// side. Labels 0..4; any further vertices are unlabelled.
struct Fig1Fixture {
    OrientedGraph graph;
    VertexId u = 0;
    VertexId u_prime = 1;
    VertexId v = 2;
    VertexId v_prime = 3;
    VertexId x = 4;
};
bool satisfies_fixture_invariants(const Fig1Fixture& f, const Limits& limits = default_limits());

/// First such graph on 5, 6, then 7 vertices, same order as derive_gadget_J.
/// Cached. Errc::no_gadget_found if none.
const Fig1Fixture& derive_fig1_fixture();

/// Ĝ from J, G1 and two copies of G2 plus a hub q. Maps: "J" (u, u', v, v', w),
/// "q", "G1", "G2", "G2'". Errc::not_oclique unless both inputs are oriented cliques.
ReductionInstance<OrientedGraph> homfull_gadget(const OrientedGraph& g1, const OrientedGraph& g2,
                                                const GadgetJ& j);
ReductionInstance<OrientedGraph> homfull_gadget(const OrientedGraph& g1, const OrientedGraph& g2);

/// Γ̃ = Γ plus a clique Λ on {v'_1..v'_n, s, t}, the matching v_i v'_i and
/// the star t v_i. Maps: "Gamma", "Gamma'", "s", "t".
ReductionInstance<Graph> fullorient_gadget(const Graph& gamma);

/// Structural facts the hardness argument for Γ̃ relies on, as they actually
/// hold on one instance.
struct FullorientStructure {
    /// No non-adjacent pair of Γ̃ is neighbourhood comparable.
    bool no_comparable_pairs = false;
    /// No path of length 2 between two Γ vertices passes through Λ.
    bool no_gamma_path_through_lambda = false;
};
FullorientStructure fullorient_structure(const ReductionInstance<Graph>& gadget);

/// Extends an oriented-clique orientation of Γ to Γ̃: v_i -> v'_i, Λ a
/// transitive tournament with source s and sink t, t -> v_i.
/// Errc::not_oclique unless `orientation` is an oriented clique orienting gamma.
OrientedGraph orient_gadget(const Graph& gamma, const OrientedGraph& orientation);

/// Whether no non-adjacent pair of g is neighbourhood comparable.
bool no_comparable_pairs(const Graph& g);

/// First orientation (lexicographic over edge-direction vectors, edges in
/// sorted order, low -> high first) that is an oriented clique. Pruned
/// backtracking; graphs of diameter > 2 are rejected without search.
std::optional<OrientedGraph> has_oclique_orientation(const Graph& g);

/// Same answer by plain enumeration of all 2^m orientations.
/// Errc::too_large when m > limits.oclique_edges.
std::optional<OrientedGraph> oclique_orientation_exhaustive(const Graph& g, Exec exec,
                                                            const Limits& limits = default_limits());

/// First orientation passing is_hom_full_oriented. When g has no comparable
/// pair, delegates to has_oclique_orientation; otherwise enumerates all 2^m
/// orientations (Errc::too_large when m > limits.homfull_orientation_edges).
std::optional<OrientedGraph> has_homfull_orientation(const Graph& g, Exec exec = Exec::parallel,
                                                     const Limits& limits = default_limits());

/// Plain enumeration, never taking the comparability shortcut.
std::optional<OrientedGraph> homfull_orientation_exhaustive(const Graph& g, Exec exec,
                                                            const Limits& limits = default_limits());

/// Cotree orientation: across the co-components of each connected piece,
/// arcs run from the co-component with the smaller least vertex to the other.
/// Errc::not_cograph when a connected piece has a connected complement.
OrientedGraph quasi_transitive_orientation(const Graph& g);

}  // namespace homfull
