#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace homfull {

using VertexId = std::uint32_t;

/// Hard capacity of every graph value. Exponential oracles stay far below it.
inline constexpr std::size_t kMaxOrder = 128;

/// Fixed-capacity bitset over vertex ids in [0, kMaxOrder).
class VertexSet {
public:
    static constexpr std::size_t kWords = kMaxOrder / 64;

    constexpr VertexSet() = default;

    static VertexSet range(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kWords; ++w) {
            if (n >= (w + 1) * 64) {
                s.words_[w] = ~std::uint64_t{0};
            } else if (n > w * 64) {
                s.words_[w] = (std::uint64_t{1} << (n - w * 64)) - 1;
            }
        }
        return s;
    }

    static VertexSet single(VertexId v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    [[nodiscard]] bool contains(VertexId v) const {
        return (words_[v >> 6] >> (v & 63)) & 1U;
    }

    [[nodiscard]] std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    [[nodiscard]] bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    [[nodiscard]] bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < kWords; ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    /// Smallest member, or kMaxOrder when empty.
    [[nodiscard]] std::size_t first() const { return next_from(0); }

    [[nodiscard]] std::size_t next_from(std::size_t from) const {
        for (std::size_t w = from >> 6; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            if (w == (from >> 6)) bits &= ~std::uint64_t{0} << (from & 63);
            if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        }
        return kMaxOrder;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        iterator() = default;
        iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        iterator& operator++() {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = kMaxOrder;
    };

    [[nodiscard]] iterator begin() const { return {this, first()}; }
    [[nodiscard]] iterator end() const { return {this, kMaxOrder}; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace homfull
