#pragma once

#include <cstddef>

namespace homfull {

/// Size bounds for the exponential searches.
struct Limits {
    /// Max order for canonical forms.
    std::size_t canonical_order = 10;
    /// Max order for is_hom_full_oriented and the definition oracles.
    std::size_t exhaustive_order = 10;
    /// Max order of the source graph in hom_exists.
    std::size_t hom_order = 12;
    /// Max edges for plain orientation enumeration (oriented-clique search).
    std::size_t oclique_edges = 22;
    /// Max edges when every orientation needs a hom-fullness check.
    std::size_t homfull_orientation_edges = 16;
};

/// Defaults, with HOMFULL_MAX_EXHAUSTIVE (if set to a positive integer)
/// replacing the order bounds. Read once per process.
const Limits& default_limits();

/// Raises every order bound to at least `order`; edge bounds are untouched.
Limits widened(const Limits& base, std::size_t order);

}  // namespace homfull
