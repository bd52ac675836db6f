#include "homfull/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace homfull {

namespace {

struct Rows {
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;
    /// Vertices joined to x by a directed path of length 1 or 2 in either direction.
    std::vector<VertexSet> near;
    std::size_t links = 0;
    [[nodiscard]] std::size_t order() const { return out.size(); }
};

template <AnyGraph G>
Rows rows_of(const G& g) {
    Rows r;
    const std::size_t n = g.order();
    r.out.reserve(n);
    r.in.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        r.out.push_back(g.out(v));
        r.in.push_back(g.in(v));
    }
    r.near.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        VertexSet s = r.out[v] | r.in[v];
        for (VertexId x : r.out[v]) s |= r.out[x];
        for (VertexId x : r.in[v]) s |= r.in[x];
        s.erase(v);
        r.near[v] = s;
    }
    r.links = g.link_count();
    return r;
}

/// Colour refinement run on the disjoint union of both graphs so colours are
/// comparable across them. Returns nullopt when the colour histograms differ.
std::optional<std::pair<std::vector<int>, std::vector<int>>> refine_pair(const Rows& a, const Rows& b) {
    const std::size_t na = a.order();
    const std::size_t n = na + b.order();
    auto out_of = [&](std::size_t x) -> const VertexSet& { return x < na ? a.out[x] : b.out[x - na]; };
    auto in_of = [&](std::size_t x) -> const VertexSet& { return x < na ? a.in[x] : b.in[x - na]; };
    auto offset = [&](std::size_t x) { return x < na ? std::size_t{0} : na; };

    using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<int> colour(n);
    {
        std::map<std::pair<std::size_t, std::size_t>, int> ids;
        for (std::size_t x = 0; x < n; ++x) {
            auto key = std::make_pair(out_of(x).size(), in_of(x).size());
            auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
            colour[x] = it->second;
        }
    }
    std::size_t classes = 0;
    for (int c : colour) classes = std::max(classes, static_cast<std::size_t>(c) + 1);
    for (;;) {
        std::map<int, std::size_t> hist_a;
        std::map<int, std::size_t> hist_b;
        for (std::size_t x = 0; x < n; ++x) (x < na ? hist_a : hist_b)[colour[x]]++;
        if (hist_a != hist_b) return std::nullopt;

        std::map<Signature, int> ids;
        std::vector<int> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            Signature sig;
            std::get<0>(sig) = colour[x];
            for (VertexId y : out_of(x)) std::get<1>(sig).push_back(colour[y + offset(x)]);
            for (VertexId y : in_of(x)) std::get<2>(sig).push_back(colour[y + offset(x)]);
            std::sort(std::get<1>(sig).begin(), std::get<1>(sig).end());
            std::sort(std::get<2>(sig).begin(), std::get<2>(sig).end());
            auto [it, inserted] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size()));
            next[x] = it->second;
        }
        // A refinement that splits no class leaves the histograms as checked.
        if (ids.size() == classes) break;
        classes = ids.size();
        colour = std::move(next);
    }
    std::vector<int> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(na));
    std::vector<int> cb(colour.begin() + static_cast<std::ptrdiff_t>(na), colour.end());
    return std::make_pair(std::move(ca), std::move(cb));
}

/// Backtracking with forward checking over bitset domains.
class MatchSearch {
public:
    MatchSearch(const Rows& pattern, const Rows& target, MapKind kind)
        : p_(pattern), t_(target), kind_(kind), mapping_(pattern.order()) {}

    std::optional<std::vector<VertexId>> run(std::vector<VertexSet> domains) {
        for (const auto& d : domains)
            if (d.empty()) return std::nullopt;
        VertexSet unassigned = VertexSet::range(p_.order());
        if (extend(domains, unassigned)) return mapping_;
        return std::nullopt;
    }

private:
    VertexId pick(const std::vector<VertexSet>& dom, const VertexSet& unassigned) const {
        if (kind_ == MapKind::isomorphism) return static_cast<VertexId>(unassigned.first());
        // Smallest domain first, then most links into the assigned part, then index.
        const VertexSet assigned = VertexSet::range(p_.order()) - unassigned;
        VertexId best = static_cast<VertexId>(unassigned.first());
        std::size_t best_dom = kMaxOrder + 1;
        std::size_t best_links = 0;
        for (VertexId h : unassigned) {
            const std::size_t d = dom[h].size();
            const std::size_t l = ((p_.out[h] | p_.in[h]) & assigned).size();
            if (d < best_dom || (d == best_dom && l > best_links)) {
                best = h;
                best_dom = d;
                best_links = l;
            }
        }
        return best;
    }

    bool extend(const std::vector<VertexSet>& dom, VertexSet& unassigned) {
        if (unassigned.empty()) return true;
        const VertexId h = pick(dom, unassigned);
        unassigned.erase(h);
        const bool exact = kind_ != MapKind::subgraph;
        for (VertexId g : dom[h]) {
            std::vector<VertexSet> next = dom;
            bool ok = true;
            for (VertexId x : unassigned) {
                VertexSet& d = next[x];
                if (p_.out[h].contains(x)) {
                    d &= t_.out[g];
                } else if (exact) {
                    d -= t_.out[g];
                }
                if (p_.in[h].contains(x)) {
                    d &= t_.in[g];
                } else if (exact) {
                    d -= t_.in[g];
                }
                if (p_.near[h].contains(x)) {
                    d &= t_.near[g];
                } else if (kind_ == MapKind::isomorphism) {
                    d -= t_.near[g];
                }
                d.erase(g);
                if (d.empty()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping_[h] = g;
            if (extend(next, unassigned)) return true;
        }
        unassigned.insert(h);
        return false;
    }

    const Rows& p_;
    const Rows& t_;
    MapKind kind_;
    std::vector<VertexId> mapping_;
};

std::optional<VertexMap> match(const Rows& p, const Rows& t, MapKind kind) {
    const std::size_t np = p.order();
    const std::size_t nt = t.order();
    std::vector<VertexSet> domains(np);
    if (kind == MapKind::isomorphism) {
        if (np != nt || p.links != t.links) return std::nullopt;
        auto colours = refine_pair(p, t);
        if (!colours) return std::nullopt;
        for (std::size_t h = 0; h < np; ++h)
            for (std::size_t g = 0; g < nt; ++g)
                if (colours->first[h] == colours->second[g]) domains[h].insert(static_cast<VertexId>(g));
    } else {
        if (np > nt || p.links > t.links) return std::nullopt;
        for (std::size_t h = 0; h < np; ++h) {
            for (std::size_t g = 0; g < nt; ++g) {
                if (t.out[g].size() >= p.out[h].size() && t.in[g].size() >= p.in[h].size() &&
                    t.near[g].size() >= p.near[h].size())
                    domains[h].insert(static_cast<VertexId>(g));
            }
        }
    }
    MatchSearch search(p, t, kind);
    auto found = search.run(std::move(domains));
    if (!found) return std::nullopt;
    return VertexMap{std::move(*found), kind};
}

/// Canonical labelling by branch and bound over vertex orders. Position i of
/// the encoding holds, for every earlier position j, a 2-bit code of the links
/// between the vertices placed at i and j.
class Canonizer {
public:
    explicit Canonizer(const Rows& r) : r_(r), n_(r.order()), order_(n_), less_(n_ + 1, false) {
        twin_.assign(n_, VertexSet{});
        for (VertexId x = 0; x < n_; ++x)
            for (VertexId y = x + 1; y < n_; ++y)
                if (swappable(x, y)) {
                    twin_[x].insert(y);
                    twin_[y].insert(x);
                }
    }

    std::vector<std::uint8_t> run() {
        current_.assign(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, 0);
        best_ = current_;
        have_best_ = false;
        place(0, VertexSet::range(n_), 0);
        return best_;
    }

private:
    /// Whether transposing x and y is an automorphism.
    bool swappable(VertexId x, VertexId y) const {
        VertexSet xy = VertexSet::single(x);
        xy.insert(y);
        if ((r_.out[x] - xy) != (r_.out[y] - xy)) return false;
        if ((r_.in[x] - xy) != (r_.in[y] - xy)) return false;
        return r_.out[x].contains(y) == r_.out[y].contains(x);
    }

    std::uint8_t code(VertexId a, VertexId b) const {
        return static_cast<std::uint8_t>((r_.out[a].contains(b) ? 1 : 0) | (r_.in[a].contains(b) ? 2 : 0));
    }

    void place(std::size_t depth, VertexSet remaining, std::size_t offset) {
        if (depth == n_) {
            if (!have_best_ || less_[depth]) {
                best_ = current_;
                have_best_ = true;
                std::fill(less_.begin(), less_.end(), false);
            }
            return;
        }
        VertexSet tried;
        for (VertexId x : remaining) {
            if (twin_[x].intersects(tried)) continue;
            tried.insert(x);
            bool lt = !have_best_ || less_[depth];
            bool pruned = false;
            for (std::size_t j = 0; j < depth; ++j) {
                const std::uint8_t c = code(x, order_[j]);
                current_[offset + j] = c;
                if (!lt) {
                    if (c > best_[offset + j]) {
                        pruned = true;
                        break;
                    }
                    if (c < best_[offset + j]) lt = true;
                }
            }
            if (pruned) continue;
            order_[depth] = x;
            less_[depth + 1] = lt;
            VertexSet rest = remaining;
            rest.erase(x);
            place(depth + 1, rest, offset + depth);
        }
    }

    const Rows& r_;
    std::size_t n_;
    std::vector<VertexSet> twin_;
    std::vector<VertexId> order_;
    std::vector<std::uint8_t> current_;
    std::vector<std::uint8_t> best_;
    std::vector<bool> less_;
    bool have_best_ = false;
};

}  // namespace

template <AnyGraph G>
std::optional<VertexMap> are_isomorphic(const G& a, const G& b) {
    return match(rows_of(a), rows_of(b), MapKind::isomorphism);
}

template <AnyGraph G>
std::optional<VertexMap> subgraph_embedding(const G& pattern, const G& target) {
    return match(rows_of(pattern), rows_of(target), MapKind::subgraph);
}

template <AnyGraph G>
std::optional<VertexMap> induced_embedding(const G& pattern, const G& target) {
    return match(rows_of(pattern), rows_of(target), MapKind::induced);
}

template <AnyGraph G>
CanonicalForm canonical_form(const G& g, const Limits& limits) {
    if (g.order() > limits.canonical_order)
        throw Error(Errc::too_large, "graph too large for canonical form");
    CanonicalForm f;
    f.bytes.push_back(static_cast<std::uint8_t>(G::kind));
    f.bytes.push_back(static_cast<std::uint8_t>(g.order()));
    const auto body = Canonizer(rows_of(g)).run();
    f.bytes.insert(f.bytes.end(), body.begin(), body.end());
    return f;
}

template <AnyGraph G>
bool verify_map(const G& pattern, const G& target, const VertexMap& map) {
    const auto& m = map.mapping;
    if (m.size() != pattern.order()) return false;
    std::vector<bool> used(target.order(), false);
    for (VertexId x : m) {
        if (x >= target.order() || used[x]) return false;
        used[x] = true;
    }
    if (map.kind == MapKind::isomorphism &&
        (pattern.order() != target.order() || pattern.link_count() != target.link_count()))
        return false;
    for (VertexId a = 0; a < pattern.order(); ++a) {
        for (VertexId b = 0; b < pattern.order(); ++b) {
            if (a == b) continue;
            const bool here = pattern.has_link(a, b);
            const bool there = target.has_link(m[a], m[b]);
            if (here && !there) return false;
            if (!here && there && map.kind != MapKind::subgraph) return false;
        }
    }
    return true;
}

#define HOMFULL_INSTANTIATE(G)                                                          \
    template std::optional<VertexMap> are_isomorphic<G>(const G&, const G&);            \
    template std::optional<VertexMap> subgraph_embedding<G>(const G&, const G&);        \
    template std::optional<VertexMap> induced_embedding<G>(const G&, const G&);         \
    template CanonicalForm canonical_form<G>(const G&, const Limits&);                  \
    template bool verify_map<G>(const G&, const G&, const VertexMap&);

HOMFULL_INSTANTIATE(Graph)
HOMFULL_INSTANTIATE(OrientedGraph)
HOMFULL_INSTANTIATE(Digraph)

#undef HOMFULL_INSTANTIATE

}  // namespace homfull
