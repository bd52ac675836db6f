#include "homfull/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "homfull/operators.hpp"

namespace homfull {

namespace {

void check_order(std::size_t n, const Limits& limits) {
    if (n > limits.exhaustive_order) throw Error(Errc::too_large, "graph too large for partition enumeration");
}

/// Restricted-growth enumeration with incremental pruning. A digon between
/// two blocks never disappears once present, so rejecting it early is exact.
class PartitionWalker {
public:
    PartitionWalker(std::vector<VertexSet> out, std::vector<VertexSet> in, bool digon_free,
                    const std::function<void(const BlockAssignment&)>& visit)
        : out_(std::move(out)), in_(std::move(in)), digon_free_(digon_free), visit_(visit) {
        assignment_.block_of.assign(out_.size(), 0);
    }

    void run() { step(0); }

private:
    bool digon_with_others(std::size_t b) const {
        for (std::size_t c = 0; c < members_.size(); ++c) {
            if (c == b) continue;
            if (block_out_[b].intersects(members_[c]) && block_in_[b].intersects(members_[c])) return true;
        }
        return false;
    }

    void step(VertexId x) {
        if (x == out_.size()) {
            assignment_.blocks = members_.size();
            visit_(assignment_);
            return;
        }
        const VertexSet adj = out_[x] | in_[x];
        for (std::size_t b = 0; b <= members_.size(); ++b) {
            const bool fresh = b == members_.size();
            if (fresh) {
                members_.emplace_back();
                block_out_.emplace_back();
                block_in_.emplace_back();
            } else if (adj.intersects(members_[b])) {
                continue;
            }
            const VertexSet saved_out = block_out_[b];
            const VertexSet saved_in = block_in_[b];
            members_[b].insert(x);
            block_out_[b] |= out_[x];
            block_in_[b] |= in_[x];
            if (!digon_free_ || !digon_with_others(b)) {
                assignment_.block_of[x] = static_cast<std::uint32_t>(b);
                step(x + 1);
            }
            members_[b].erase(x);
            block_out_[b] = saved_out;
            block_in_[b] = saved_in;
            if (fresh) {
                members_.pop_back();
                block_out_.pop_back();
                block_in_.pop_back();
            }
        }
    }

    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    bool digon_free_;
    const std::function<void(const BlockAssignment&)>& visit_;
    BlockAssignment assignment_;
    std::vector<VertexSet> members_;
    std::vector<VertexSet> block_out_;
    std::vector<VertexSet> block_in_;
};

template <AnyGraph G>
std::pair<std::vector<VertexSet>, std::vector<VertexSet>> rows(const G& g) {
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;
    for (VertexId v = 0; v < g.order(); ++v) {
        out.push_back(g.out(v));
        in.push_back(g.in(v));
    }
    return {std::move(out), std::move(in)};
}

template <class Q, AnyGraph G>
Q quotient_of(const G& g, const BlockAssignment& p) {
    typename Q::Builder b(p.blocks);
    for (const auto& l : g.links()) b.connect(p.block_of[l.u], p.block_of[l.v]);
    return std::move(b).build();
}

template <AnyGraph Q>
void add_image(std::map<CanonicalForm, Image<Q>>& images, Q q, const BlockAssignment& p, const Limits& limits) {
    auto form = canonical_form(q, limits);
    if (images.contains(form)) return;
    images.emplace(form, Image<Q>{std::move(q), p.partition(), form});
}

template <AnyGraph Q>
std::vector<Image<Q>> flatten(std::map<CanonicalForm, Image<Q>>&& images) {
    std::vector<Image<Q>> r;
    r.reserve(images.size());
    for (auto& [form, image] : images) r.push_back(std::move(image));
    return r;
}

template <AnyGraph Q, AnyGraph G>
Verdict all_embed(const std::vector<Image<Q>>& images, const G& g) {
    for (const auto& image : images)
        if (!subgraph_embedding(image.graph, g)) return {false, image.partition};
    return {true, {}};
}

template <AnyGraph G>
class HomSearch {
public:
    HomSearch(const G& g, const G& h) : g_(g), h_(h), image_(g.order()) {}

    std::optional<std::vector<VertexId>> run() {
        std::vector<VertexSet> dom(g_.order(), VertexSet::range(h_.order()));
        if (g_.order() > 0 && h_.order() == 0) return std::nullopt;
        if (extend(dom, VertexSet::range(g_.order()))) return image_;
        return std::nullopt;
    }

private:
    bool extend(const std::vector<VertexSet>& dom, VertexSet unassigned) {
        if (unassigned.empty()) return true;
        VertexId x = static_cast<VertexId>(unassigned.first());
        for (VertexId y : unassigned)
            if (dom[y].size() < dom[x].size()) x = y;
        unassigned.erase(x);
        for (VertexId target : dom[x]) {
            std::vector<VertexSet> next = dom;
            bool ok = true;
            for (VertexId y : unassigned) {
                if (g_.out(x).contains(y)) next[y] &= h_.out(target);
                if (g_.in(x).contains(y)) next[y] &= h_.in(target);
                if (next[y].empty()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[x] = target;
            if (extend(next, unassigned)) return true;
        }
        return false;
    }

    const G& g_;
    const G& h_;
    std::vector<VertexId> image_;
};

/// Advances a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<VertexId>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Partition BlockAssignment::partition() const {
    Partition p;
    p.blocks.resize(blocks);
    for (std::size_t x = 0; x < block_of.size(); ++x) p.blocks[block_of[x]].push_back(static_cast<VertexId>(x));
    return p;
}

void for_each_valid_partition(const Graph& g, const std::function<void(const BlockAssignment&)>& visit) {
    auto [out, in] = rows(g);
    PartitionWalker(std::move(out), std::move(in), false, visit).run();
}

void for_each_valid_partition(const OrientedGraph& g, bool digon_free,
                              const std::function<void(const BlockAssignment&)>& visit) {
    auto [out, in] = rows(g);
    PartitionWalker(std::move(out), std::move(in), digon_free, visit).run();
}

Graph quotient(const Graph& g, const BlockAssignment& p) { return quotient_of<Graph>(g, p); }
Digraph quotient(const OrientedGraph& g, const BlockAssignment& p) { return quotient_of<Digraph>(g, p); }
OrientedGraph oriented_quotient(const OrientedGraph& g, const BlockAssignment& p) {
    return quotient_of<OrientedGraph>(g, p);
}

std::vector<Image<Graph>> graph_images(const Graph& g, const Limits& limits) {
    check_order(g.order(), limits);
    std::map<CanonicalForm, Image<Graph>> images;
    for_each_valid_partition(g, [&](const BlockAssignment& p) { add_image(images, quotient(g, p), p, limits); });
    return flatten(std::move(images));
}

std::vector<Image<OrientedGraph>> oriented_images(const OrientedGraph& g, const Limits& limits) {
    check_order(g.order(), limits);
    std::map<CanonicalForm, Image<OrientedGraph>> images;
    for_each_valid_partition(g, true,
                             [&](const BlockAssignment& p) { add_image(images, oriented_quotient(g, p), p, limits); });
    return flatten(std::move(images));
}

std::vector<Image<Digraph>> antisymmetric_images(const OrientedGraph& g, const Limits& limits) {
    check_order(g.order(), limits);
    std::map<CanonicalForm, Image<Digraph>> images;
    for_each_valid_partition(g, false,
                             [&](const BlockAssignment& p) { add_image(images, quotient(g, p), p, limits); });
    return flatten(std::move(images));
}

Verdict is_hom_full_by_definition(const Graph& g, const Limits& limits) {
    return all_embed(graph_images(g, limits), g);
}

Verdict is_hom_full_by_definition(const OrientedGraph& g, ImageSemantics semantics, const Limits& limits) {
    if (semantics == ImageSemantics::oriented) return all_embed(oriented_images(g, limits), g);
    return all_embed(antisymmetric_images(g, limits), to_digraph(g));
}

Verdict every_image_induced(const Graph& g, const Limits& limits) {
    for (const auto& image : graph_images(g, limits))
        if (!induced_embedding(image.graph, g)) return {false, image.partition};
    return {true, {}};
}

Verdict every_image_retract(const Graph& g, const Limits& limits) {
    check_order(g.order(), limits);
    std::optional<Partition> failure;
    for_each_valid_partition(g, [&](const BlockAssignment& p) {
        if (failure) return;
        const Partition part = p.partition();
        const Graph q = quotient(g, p);
        std::vector<std::size_t> choice(p.blocks, 0);
        for (;;) {
            bool ok = true;
            for (std::size_t a = 0; a < p.blocks && ok; ++a)
                for (std::size_t b = a + 1; b < p.blocks && ok; ++b)
                    ok = q.adjacent(static_cast<VertexId>(a), static_cast<VertexId>(b)) ==
                         g.adjacent(part.blocks[a][choice[a]], part.blocks[b][choice[b]]);
            if (ok) return;
            std::size_t i = 0;
            while (i < p.blocks && ++choice[i] == part.blocks[i].size()) choice[i++] = 0;
            if (i == p.blocks) break;
        }
        failure = part;
    });
    if (failure) return {false, *failure};
    return {true, {}};
}

template <AnyGraph G>
std::optional<std::vector<VertexId>> hom_exists(const G& g, const G& h, const Limits& limits) {
    if (g.order() > limits.hom_order) throw Error(Errc::too_large, "source graph too large for hom search");
    return HomSearch<G>(g, h).run();
}

template std::optional<std::vector<VertexId>> hom_exists<Graph>(const Graph&, const Graph&, const Limits&);
template std::optional<std::vector<VertexId>> hom_exists<OrientedGraph>(const OrientedGraph&, const OrientedGraph&,
                                                                        const Limits&);
template std::optional<std::vector<VertexId>> hom_exists<Digraph>(const Digraph&, const Digraph&, const Limits&);

OrientedGraph minimum_image(const OrientedGraph& g, const Limits& limits) {
    auto images = oriented_images(g, limits);
    return std::move(images.front().graph);
}

std::vector<VertexId> oriented_core_vertices(const OrientedGraph& g, const Limits& limits) {
    if (g.order() > limits.hom_order) throw Error(Errc::too_large, "graph too large for the core search");
    const std::size_t n = g.order();
    if (n == 0) return {};
    // Shrink by single vertices: if h maps into h - x then both have the same
    // core, and a graph with no such x is its own core.
    std::vector<VertexId> kept(n);
    std::iota(kept.begin(), kept.end(), VertexId{0});
    const Limits wide = widened(limits, n);
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        const OrientedGraph h = induced_subgraph(g, std::span<const VertexId>(kept));
        for (std::size_t i = kept.size(); i-- > 0;) {
            if (hom_exists(h, delete_vertex(h, static_cast<VertexId>(i)), wide)) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                shrunk = true;
                break;
            }
        }
    }
    const OrientedGraph core = induced_subgraph(g, std::span<const VertexId>(kept));
    const std::size_t k = kept.size();
    std::vector<VertexId> subset(k);
    std::iota(subset.begin(), subset.end(), VertexId{0});
    do {
        const OrientedGraph candidate = induced_subgraph(g, std::span<const VertexId>(subset));
        if (candidate.arc_count() == core.arc_count() && are_isomorphic(candidate, core)) return subset;
    } while (next_combination(subset, n));
    return kept;
}

OrientedGraph oriented_core(const OrientedGraph& g, const Limits& limits) {
    const auto vs = oriented_core_vertices(g, limits);
    return induced_subgraph(g, std::span<const VertexId>(vs));
}

}  // namespace homfull
