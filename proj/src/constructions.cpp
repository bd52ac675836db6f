#include "homfull/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "homfull/generators.hpp"
#include "homfull/operators.hpp"
#include "homfull/recognition.hpp"

namespace homfull {

namespace {

std::vector<VertexId> iota_ids(VertexId first, std::size_t count) {
    std::vector<VertexId> ids(count);
    std::iota(ids.begin(), ids.end(), first);
    return ids;
}

void require_oclique(const OrientedGraph& g, const char* what) {
    if (!is_oriented_clique(g)) throw Error(Errc::not_oclique, std::string(what) + " is not an oriented clique");
}

void check_maps(const ReductionInstance<OrientedGraph>& r) {
    for (const auto& m : r.maps) {
        VertexSet seen;
        for (VertexId x : m.targets) {
            if (x >= r.output.order() || seen.contains(x))
                throw Error(Errc::invalid_argument, "bad index map " + m.label);
            seen.insert(x);
        }
    }
}

bool connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

bool diameter_at_most_two(const Graph& g) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && !g.neighbours(u).intersects(g.neighbours(v))) return false;
    return true;
}

// Backtracking over edge directions in sorted edge order; direction 0
// (low -> high) is tried first so the first hit is the lex-first vector.
class OcliqueSearch {
public:
    explicit OcliqueSearch(const Graph& g) : g_(g), edges_(g.edges()), out_(g.order()), in_(g.order()), free_(g.order()) {
        for (VertexId x = 0; x < g.order(); ++x) free_[x] = g.neighbours(x);
        for (VertexId x = 0; x < g.order(); ++x) {
            std::vector<VertexId> far;
            for (VertexId y = 0; y < g.order(); ++y)
                if (y != x && !g.adjacent(x, y)) far.push_back(y);
            far_.push_back(std::move(far));
        }
    }

    std::optional<OrientedGraph> run() {
        if (!descend(0)) return std::nullopt;
        OrientedGraph::Builder b(g_.order());
        for (VertexId x = 0; x < g_.order(); ++x)
            for (VertexId y : out_[x]) b.connect(x, y);
        return std::move(b).build();
    }

private:
    bool viable(VertexId x, VertexId y) const {
        const VertexSet xo = out_[x] | free_[x];
        const VertexSet xi = in_[x] | free_[x];
        const VertexSet yo = out_[y] | free_[y];
        const VertexSet yi = in_[y] | free_[y];
        return (xo & yi).size() > 0 || (xi & yo).size() > 0;
    }

    bool consistent(VertexId a, VertexId b) const {
        for (VertexId end : {a, b})
            for (VertexId y : far_[end])
                if (!viable(end, y)) return false;
        // pairs whose only common neighbours include a or b
        for (VertexId mid : {a, b}) {
            const VertexSet nb = g_.neighbours(mid);
            for (VertexId x : nb)
                for (VertexId y : nb)
                    if (x < y && !g_.adjacent(x, y) && !viable(x, y)) return false;
        }
        return true;
    }

    void set(VertexId from, VertexId to, bool on) {
        if (on) {
            out_[from].insert(to);
            in_[to].insert(from);
            free_[from].erase(to);
            free_[to].erase(from);
        } else {
            out_[from].erase(to);
            in_[to].erase(from);
            free_[from].insert(to);
            free_[to].insert(from);
        }
    }

    bool descend(std::size_t k) {
        if (k == edges_.size()) return true;
        const auto [lo, hi] = edges_[k];
        for (int dir = 0; dir < 2; ++dir) {
            const VertexId from = dir == 0 ? lo : hi;
            const VertexId to = dir == 0 ? hi : lo;
            set(from, to, true);
            if (consistent(lo, hi) && descend(k + 1)) return true;
            set(from, to, false);
        }
        return false;
    }

    const Graph& g_;
    std::vector<Link> edges_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> free_;
    std::vector<std::vector<VertexId>> far_;
};

void orient_cotree(const Graph& g, const std::vector<VertexId>& ids, OrientedGraph::Builder& b) {
    if (ids.size() <= 1) return;
    const Graph sub = induced_subgraph(g, std::span<const VertexId>(ids));
    auto parts = components(sub);
    if (parts.size() == 1) {
        parts = components(complement(sub));
        if (parts.size() == 1) throw Error(Errc::not_cograph, "connected piece with connected complement");
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (VertexId x : parts[i])
                    for (VertexId y : parts[j]) b.connect(ids[x], ids[y]);
    }
    for (const auto& part : parts) {
        std::vector<VertexId> inner;
        for (VertexId x : part) inner.push_back(ids[x]);
        orient_cotree(g, inner, b);
    }
}

int degree_two_count(const Graph& g) {
    int c = 0;
    for (VertexId x = 0; x < g.order(); ++x) c += g.degree(x) == 2;
    return c;
}

}  // namespace

std::pair<OrientedGraph, VertexMap> embed_in_oclique(const OrientedGraph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw Error(Errc::invalid_argument, "embedding needs at least one vertex");
    const OrientedGraph base = bn_oclique(n);
    OrientedGraph::Builder b(2 * n);
    for (const auto& l : base.arcs()) b.connect(l.u, l.v);
    for (const auto& l : g.arcs()) b.connect(l.u, l.v);
    VertexMap map{iota_ids(0, n), MapKind::induced};
    return {std::move(b).build(), std::move(map)};
}

ReductionInstance<OrientedGraph> dagiso_gadget(const OrientedGraph& g) {
    if (!is_acyclic(g)) throw Error(Errc::not_acyclic, "G* needs an acyclic input");
    const auto n = static_cast<VertexId>(g.order());
    if (n == 0) throw Error(Errc::invalid_argument, "G* needs at least one vertex");
    const VertexId left = 0;
    const VertexId right = n;
    const VertexId tour = 2 * n;
    const OrientedGraph t = regular_tournament(2 * n + 1);

    OrientedGraph::Builder b(4 * n + 1);
    for (const auto& l : g.arcs()) {
        b.connect(left + l.u, left + l.v);
        b.connect(right + l.u, right + l.v);
    }
    for (VertexId i = 0; i < n; ++i) b.connect(left + i, right + i);
    for (VertexId j = 0; j < n; ++j)
        for (VertexId k = 0; k < n; ++k)
            if (j != k) b.connect(right + j, left + k);
    for (const auto& l : t.arcs()) b.connect(tour + l.u, tour + l.v);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId x = 0; x <= 2 * n; ++x) {
            b.connect(left + i, tour + x);
            b.connect(tour + x, right + i);
        }

    ReductionInstance<OrientedGraph> r{"dagiso", std::move(b).build(),
                                       {{"L", iota_ids(left, n)}, {"R", iota_ids(right, n)}, {"T", iota_ids(tour, 2 * n + 1)}}};
    if (r.output.order() != 4 * std::size_t{n} + 1) throw Error(Errc::invalid_argument, "G* has the wrong order");
    check_maps(r);
    require_oclique(r.output, "G*");
    return r;
}

bool satisfies_gadget_invariants(const GadgetJ& j, const Limits& limits) {
    const OrientedGraph& g = j.graph;
    if (g.adjacent(j.u, j.u_prime)) return false;
    if (has_two_dipath(g, j.u, j.u_prime) || has_two_dipath(g, j.u_prime, j.u)) return false;
    // u picks up extra out-neighbours in the gadget, so only u' under u would
    // make the pair comparable there
    if (dominated_by(g, j.u_prime, j.u)) return false;
    if (g.adjacent(j.v, j.v_prime) || !dominated_by(g, j.v_prime, j.v)) return false;
    if (!are_isomorphic(oriented_identify(g, j.u, j.u_prime), delete_vertex(g, j.v_prime))) return false;
    return static_cast<bool>(is_hom_full_oriented(g, widened(limits, g.order())));
}

ReductionInstance<OrientedGraph> homfull_gadget(const OrientedGraph& g1, const OrientedGraph& g2, const GadgetJ& j) {
    require_oclique(g1, "G1");
    require_oclique(g2, "G2");
    const auto n1 = static_cast<VertexId>(g1.order());
    const auto n2 = static_cast<VertexId>(g2.order());
    const auto nj = static_cast<VertexId>(j.graph.order());
    const VertexId q = nj;
    const VertexId a = q + 1;      // G1
    const VertexId c = a + n1;     // G2
    const VertexId c2 = c + n2;    // G2'
    const VertexId total = c2 + n2;

    OrientedGraph::Builder b(total);
    for (const auto& l : j.graph.arcs()) b.connect(l.u, l.v);
    for (const auto& l : g1.arcs()) b.connect(a + l.u, a + l.v);
    for (const auto& l : g2.arcs()) {
        b.connect(c + l.u, c + l.v);
        b.connect(c2 + l.u, c2 + l.v);
    }
    for (VertexId x = 0; x < nj; ++x) b.connect(q, x);
    for (VertexId y = a; y < total; ++y) b.connect(y, q);
    for (VertexId y1 = 0; y1 < n1; ++y1)
        for (VertexId y2 = 0; y2 < n2; ++y2) {
            b.connect(a + y1, c + y2);
            b.connect(c2 + y2, a + y1);
        }
    for (VertexId y2 = 0; y2 < n2; ++y2)
        for (VertexId z = 0; z < n2; ++z) b.connect(c + y2, c2 + z);
    for (VertexId y = 0; y < n1; ++y) b.connect(j.w, a + y);
    for (VertexId y = 0; y < n2; ++y) {
        b.connect(j.v, c + y);
        b.connect(j.u, c2 + y);
    }

    ReductionInstance<OrientedGraph> r{"homfull",
                                       std::move(b).build(),
                                       {{"J", {j.u, j.u_prime, j.v, j.v_prime, j.w}},
                                        {"q", {q}},
                                        {"G1", iota_ids(a, n1)},
                                        {"G2", iota_ids(c, n2)},
                                        {"G2'", iota_ids(c2, n2)}}};
    if (r.output.order() != std::size_t{n1} + 2 * std::size_t{n2} + nj + 1)
        throw Error(Errc::invalid_argument, "gadget has the wrong order");
    check_maps(r);
    return r;
}

ReductionInstance<OrientedGraph> homfull_gadget(const OrientedGraph& g1, const OrientedGraph& g2) {
    return homfull_gadget(g1, g2, derive_gadget_J());
}

namespace {

// Walks oriented graphs on n vertices as digit vectors over the pairs in
// lexicographic order (0 none, 1 low -> high, 2 high -> low), first pair most
// significant. Once the last pair of row k is set, vertices 0..k are final and
// `row_done(k)` may prune.
class PairWalk {
public:
    struct Hooks {
        std::function<bool(std::size_t, const std::vector<VertexSet>&, const std::vector<VertexSet>&)> row_done;
        std::function<bool(const OrientedGraph&)> accept;
    };

    PairWalk(std::size_t n, std::vector<int> fixed, Hooks hooks) : n_(n), fixed_(std::move(fixed)), hooks_(std::move(hooks)) {
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j) pairs_.push_back({i, j});
    }

    [[nodiscard]] std::size_t pair_count() const { return pairs_.size(); }

    /// Digits of the first `depth` pairs given by `prefix` (base 3, first pair
    /// most significant); returns the first accepted graph below it.
    std::optional<std::vector<int>> first_below(std::uint64_t prefix, std::size_t depth) const {
        std::vector<int> digits(pairs_.size(), 0);
        for (std::size_t k = depth; k-- > 0;) {
            digits[k] = static_cast<int>(prefix % 3);
            prefix /= 3;
        }
        for (std::size_t k = 0; k < depth; ++k)
            if (fixed_[k] >= 0 && digits[k] != fixed_[k]) return std::nullopt;
        State st{std::vector<VertexSet>(n_), std::vector<VertexSet>(n_), digits};
        if (descend(st, 0, depth)) return st.digits;
        return std::nullopt;
    }

    [[nodiscard]] OrientedGraph build(const std::vector<int>& digits) const {
        OrientedGraph::Builder b(n_);
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (digits[k] == 1) b.connect(pairs_[k].u, pairs_[k].v);
            if (digits[k] == 2) b.connect(pairs_[k].v, pairs_[k].u);
        }
        return std::move(b).build();
    }

    std::optional<OrientedGraph> first(Exec exec) const {
        const std::size_t depth = std::min<std::size_t>(4, pairs_.size());
        std::uint64_t chunks = 1;
        for (std::size_t k = 0; k < depth; ++k) chunks *= 3;
        const auto hit = first_index(chunks, [&](std::uint64_t c) { return first_below(c, depth).has_value(); }, exec);
        if (!hit) return std::nullopt;
        return build(*first_below(*hit, depth));
    }

private:
    struct State {
        std::vector<VertexSet> out;
        std::vector<VertexSet> in;
        std::vector<int> digits;
    };

    void apply(State& st, std::size_t k, int digit, bool on) const {
        if (digit == 0) return;
        const auto [a, b] = pairs_[k];
        const VertexId from = digit == 1 ? a : b;
        const VertexId to = digit == 1 ? b : a;
        if (on) {
            st.out[from].insert(to);
            st.in[to].insert(from);
        } else {
            st.out[from].erase(to);
            st.in[to].erase(from);
        }
    }

    bool descend(State& st, std::size_t k, std::size_t preset) const {
        if (k > 0 && (k == pairs_.size() || pairs_[k].u != pairs_[k - 1].u)) {
            if (!hooks_.row_done(pairs_[k - 1].u, st.out, st.in)) return false;
        }
        if (k == pairs_.size()) {
            // rows past the last pair row complete trivially
            return hooks_.row_done(n_ - 1, st.out, st.in) && hooks_.accept(build(st.digits));
        }
        const int lo = k < preset ? st.digits[k] : (fixed_[k] >= 0 ? fixed_[k] : 0);
        const int hi = k < preset ? st.digits[k] : (fixed_[k] >= 0 ? fixed_[k] : 2);
        for (int d = lo; d <= hi; ++d) {
            st.digits[k] = d;
            apply(st, k, d, true);
            const bool found = descend(st, k + 1, preset);
            apply(st, k, d, false);
            if (found) return true;
        }
        return false;
    }

    std::size_t n_;
    std::vector<Link> pairs_;
    std::vector<int> fixed_;
    Hooks hooks_;
};

std::size_t pair_index(std::size_t n, VertexId a, VertexId b) {
    std::size_t k = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++k)
            if (i == a && j == b) return k;
    throw Error(Errc::index_out_of_range, "pair outside the vertex range");
}

bool two_dipath_either(const std::vector<VertexSet>& out, const std::vector<VertexSet>& in, VertexId a, VertexId b) {
    return out[a].intersects(in[b]) || out[b].intersects(in[a]);
}

bool dominated(const std::vector<VertexSet>& out, const std::vector<VertexSet>& in, VertexId a, VertexId b) {
    return out[a].is_subset_of(out[b]) && in[a].is_subset_of(in[b]);
}

bool gadget_behaves(const GadgetJ& j) {
    const OrientedGraph arc = directed_path(2);
    {
        const auto r = homfull_gadget(arc, arc, j);
        const Limits lim = widened(default_limits(), r.output.order());
        const auto pairs = elementary_pairs(r.output);
        if (pairs.size() != 2 || pairs[0].u != j.u || pairs[0].v != j.u_prime || pairs[1].u != j.v ||
            pairs[1].v != j.v_prime)
            return false;
        if (neighbourhood_comparable(r.output, j.u, j.u_prime)) return false;
        if (!is_hom_full_oriented(r.output, lim)) return false;
    }
    const OrientedGraph k1 = arcless(1);
    const OrientedGraph c3 = directed_cycle(3);
    const OrientedGraph tt3 = transitive_tournament(3);
    const std::pair<const OrientedGraph*, const OrientedGraph*> bad[] = {{&k1, &arc}, {&arc, &k1}, {&c3, &tt3}, {&tt3, &c3}};
    for (const auto& [g1, g2] : bad) {
        const auto r = homfull_gadget(*g1, *g2, j);
        if (is_hom_full_oriented(r.output, widened(default_limits(), r.output.order()))) return false;
    }
    return true;
}

GadgetJ search_gadget() {
    constexpr VertexId u = 0, up = 1, v = 2, vp = 3;
    for (std::size_t n : {5, 6}) {
        const Limits lim = widened(default_limits(), n);
        std::vector<int> fixed(n * (n - 1) / 2, -1);
        fixed[pair_index(n, u, up)] = 0;
        fixed[pair_index(n, v, vp)] = 0;
        PairWalk::Hooks hooks;
        hooks.row_done = [&](std::size_t row, const std::vector<VertexSet>& out, const std::vector<VertexSet>& in) {
            if (row == up) return !two_dipath_either(out, in, u, up) && !dominated(out, in, up, u);
            if (row == vp) return dominated(out, in, vp, v);
            return true;
        };
        hooks.accept = [&](const OrientedGraph& g) {
            GadgetJ j{g};
            return satisfies_gadget_invariants(j, lim) && gadget_behaves(j);
        };
        if (auto g = PairWalk(n, fixed, hooks).first(Exec::parallel)) return GadgetJ{*g};
    }
    throw Error(Errc::no_gadget_found, "no gadget on 5 or 6 vertices");
}

Fig1Fixture search_fixture() {
    constexpr VertexId u = 0, up = 1, v = 2, vp = 3, x = 4;
    for (std::size_t n : {5, 6, 7}) {
        const Limits lim = widened(default_limits(), n);
        std::vector<int> fixed(n * (n - 1) / 2, -1);
        fixed[pair_index(n, u, up)] = 0;
        fixed[pair_index(n, v, vp)] = 0;
        fixed[pair_index(n, up, x)] = 2;
        PairWalk::Hooks hooks;
        hooks.row_done = [&](std::size_t row, const std::vector<VertexSet>& out, const std::vector<VertexSet>& in) {
            if (row == up && (two_dipath_either(out, in, u, up) || dominated(out, in, u, up) || dominated(out, in, up, u)))
                return false;
            if (row == vp && (two_dipath_either(out, in, v, vp) || !(dominated(out, in, v, vp) || dominated(out, in, vp, v))))
                return false;
            // every other pair among finished vertices must be close
            for (VertexId a = 0; a < row; ++a) {
                const VertexId b = static_cast<VertexId>(row);
                if ((a == u && b == up) || (a == v && b == vp)) continue;
                if (out[a].contains(b) || out[b].contains(a)) continue;
                if (!two_dipath_either(out, in, a, b)) return false;
            }
            return true;
        };
        hooks.accept = [&](const OrientedGraph& g) {
            Fig1Fixture f{g};
            f.x = x;
            return satisfies_fixture_invariants(f, lim);
        };
        if (auto g = PairWalk(n, fixed, hooks).first(Exec::parallel)) return Fig1Fixture{*g};
    }
    throw Error(Errc::no_gadget_found, "no fixture on at most 7 vertices");
}

}  // namespace

bool satisfies_fixture_invariants(const Fig1Fixture& f, const Limits& limits) {
    const OrientedGraph& g = f.graph;
    if (!g.has_arc(f.x, f.u_prime)) return false;
    if (g.adjacent(f.v, f.v_prime) || !neighbourhood_comparable(g, f.v, f.v_prime)) return false;
    if (g.adjacent(f.u, f.u_prime) || has_two_dipath(g, f.u, f.u_prime) || has_two_dipath(g, f.u_prime, f.u)) return false;
    if (neighbourhood_comparable(g, f.u, f.u_prime)) return false;
    const auto pairs = elementary_pairs(g);
    if (pairs.size() != 2 || pairs[0].u != f.u || pairs[0].v != f.u_prime || pairs[1].u != f.v || pairs[1].v != f.v_prime)
        return false;
    const OrientedGraph lhs = delete_vertex(delete_link(g, f.x, f.u_prime), f.v_prime);
    const OrientedGraph rhs = oriented_identify(g, f.u, f.u_prime);
    if (degree_two_count(underlying(lhs)) != 1 || degree_two_count(underlying(rhs)) != 1) return false;
    if (!are_isomorphic(lhs, rhs)) return false;
    return static_cast<bool>(is_hom_full_oriented(g, widened(limits, g.order())));
}

const GadgetJ& derive_gadget_J() {
    static const GadgetJ cached = search_gadget();
    return cached;
}

const Fig1Fixture& derive_fig1_fixture() {
    static const Fig1Fixture cached = search_fixture();
    return cached;
}

ReductionInstance<Graph> fullorient_gadget(const Graph& gamma) {
    const auto n = static_cast<VertexId>(gamma.order());
    if (n == 0) throw Error(Errc::invalid_argument, "gadget needs at least one vertex");
    const VertexId s = 2 * n;
    const VertexId t = 2 * n + 1;
    Graph::Builder b(2 * n + 2);
    for (const auto& e : gamma.edges()) b.connect(e.u, e.v);
    for (VertexId x = n; x < 2 * n + 2; ++x)
        for (VertexId y = x + 1; y < 2 * n + 2; ++y) b.connect(x, y);
    for (VertexId i = 0; i < n; ++i) {
        b.connect(i, n + i);
        b.connect(t, i);
    }
    ReductionInstance<Graph> r{"fullorient", std::move(b).build(), {{"Gamma", iota_ids(0, n)}, {"Gamma'", iota_ids(n, n)}, {"s", {s}}, {"t", {t}}}};
    if (r.output.order() != 2 * std::size_t{n} + 2) throw Error(Errc::invalid_argument, "gadget has the wrong order");
    return r;
}

FullorientStructure fullorient_structure(const ReductionInstance<Graph>& gadget) {
    const Graph& g = gadget.output;
    const auto& gamma = gadget.map("Gamma").targets;
    VertexSet lambda = VertexSet::range(g.order());
    for (VertexId x : gamma) lambda.erase(x);
    FullorientStructure out;
    out.no_comparable_pairs = no_comparable_pairs(g);
    out.no_gamma_path_through_lambda = true;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        for (std::size_t k = i + 1; k < gamma.size(); ++k)
            if ((g.neighbours(gamma[i]) & g.neighbours(gamma[k]) & lambda).size() > 0)
                out.no_gamma_path_through_lambda = false;
    return out;
}

OrientedGraph orient_gadget(const Graph& gamma, const OrientedGraph& orientation) {
    if (orientation.order() != gamma.order() || underlying(orientation).edges() != gamma.edges())
        throw Error(Errc::invalid_argument, "orientation does not orient the given graph");
    require_oclique(orientation, "orientation");
    const auto n = static_cast<VertexId>(gamma.order());
    const VertexId s = 2 * n;
    const VertexId t = 2 * n + 1;
    OrientedGraph::Builder b(2 * n + 2);
    for (const auto& l : orientation.arcs()) b.connect(l.u, l.v);
    std::vector<VertexId> chain{s};
    for (VertexId i = 0; i < n; ++i) chain.push_back(n + i);
    chain.push_back(t);
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t k = i + 1; k < chain.size(); ++k) b.connect(chain[i], chain[k]);
    for (VertexId i = 0; i < n; ++i) {
        b.connect(i, n + i);
        b.connect(t, i);
    }
    OrientedGraph out = std::move(b).build();
    require_oclique(out, "oriented gadget");
    return out;
}

bool no_comparable_pairs(const Graph& g) {
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && neighbourhood_comparable(g, u, v)) return false;
    return true;
}

std::optional<OrientedGraph> has_oclique_orientation(const Graph& g) {
    if (!connected(g) || !diameter_at_most_two(g)) return std::nullopt;
    return OcliqueSearch(g).run();
}

std::optional<OrientedGraph> oclique_orientation_exhaustive(const Graph& g, Exec exec, const Limits& limits) {
    if (g.edge_count() > limits.oclique_edges) throw Error(Errc::too_large, "too many edges to enumerate orientations");
    const auto hit = first_index(
        orientation_count(g), [&](std::uint64_t code) { return static_cast<bool>(is_oriented_clique(orientation_from_code(g, code))); },
        exec);
    if (!hit) return std::nullopt;
    return orientation_from_code(g, *hit);
}

std::optional<OrientedGraph> homfull_orientation_exhaustive(const Graph& g, Exec exec, const Limits& limits) {
    if (g.edge_count() > limits.homfull_orientation_edges)
        throw Error(Errc::too_large, "too many edges to enumerate orientations");
    const Limits lim = widened(limits, g.order());
    const auto hit = first_index(
        orientation_count(g),
        [&](std::uint64_t code) { return static_cast<bool>(is_hom_full_oriented(orientation_from_code(g, code), lim)); }, exec);
    if (!hit) return std::nullopt;
    return orientation_from_code(g, *hit);
}

std::optional<OrientedGraph> has_homfull_orientation(const Graph& g, Exec exec, const Limits& limits) {
    if (no_comparable_pairs(g)) return has_oclique_orientation(g);
    return homfull_orientation_exhaustive(g, exec, limits);
}

OrientedGraph quasi_transitive_orientation(const Graph& g) {
    OrientedGraph::Builder b(g.order());
    orient_cotree(g, iota_ids(0, g.order()), b);
    return std::move(b).build();
}

}  // namespace homfull
