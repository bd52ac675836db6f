#include "homfull/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace homfull {

const Limits& default_limits() {
    static const Limits limits = [] {
        Limits l;
        if (const char* env = std::getenv("HOMFULL_MAX_EXHAUSTIVE")) {
            std::size_t value = 0;
            const auto* end = env + std::strlen(env);
            const auto [ptr, ec] = std::from_chars(env, end, value);
            if (ec == std::errc{} && ptr == end && value > 0) {
                l.canonical_order = value;
                l.exhaustive_order = value;
                l.hom_order = std::max(l.hom_order, value);
            }
        }
        return l;
    }();
    return limits;
}

Limits widened(const Limits& base, std::size_t order) {
    Limits l = base;
    l.canonical_order = std::max(l.canonical_order, order);
    l.exhaustive_order = std::max(l.exhaustive_order, order);
    l.hom_order = std::max(l.hom_order, order);
    return l;
}

}  // namespace homfull
