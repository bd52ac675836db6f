#pragma once

// Index-space sweeps used by the exhaustive searches and the verification
// harness. Each kernel has a serial reference path; the parallel path must
// return exactly the same result for any thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <omp.h>

namespace homfull {

enum class Exec { serial, parallel };

namespace detail {

/// Holds the first exception thrown inside a parallel region.
class ExceptionSlot {
public:
    void capture() {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!error_) error_ = std::current_exception();
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }
    [[nodiscard]] bool set() const { return static_cast<bool>(error_); }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

}  // namespace detail

/// Smallest index in [0, count) satisfying pred, or nullopt.
template <class Pred>
std::optional<std::uint64_t> first_index(std::uint64_t count, Pred&& pred, Exec exec) {
    if (exec == Exec::serial) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    std::atomic<std::uint64_t> best{count};
    detail::ExceptionSlot error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < n; ++s) {
        const auto i = static_cast<std::uint64_t>(s);
        if (i >= best.load(std::memory_order_relaxed)) continue;
        try {
            if (pred(i)) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                }
            }
        } catch (...) {
            error.capture();
        }
    }
    error.rethrow();
    if (best.load() == count) return std::nullopt;
    return best.load();
}

/// Runs visit(i) for every index and keeps the non-empty results, ordered by
/// index. `visit` returns std::optional<T>.
template <class T, class Visit>
std::vector<std::pair<std::uint64_t, T>> collect(std::uint64_t count, Visit&& visit, Exec exec) {
    std::vector<std::pair<std::uint64_t, T>> out;
    if (exec == Exec::serial) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (auto r = visit(i)) out.emplace_back(i, std::move(*r));
        return out;
    }
    detail::ExceptionSlot error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
    {
        std::vector<std::pair<std::uint64_t, T>> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t s = 0; s < n; ++s) {
            try {
                if (auto r = visit(static_cast<std::uint64_t>(s))) local.emplace_back(static_cast<std::uint64_t>(s), std::move(*r));
            } catch (...) {
                error.capture();
            }
        }
#pragma omp critical(homfull_collect)
        {
            for (auto& item : local) out.push_back(std::move(item));
        }
    }
    error.rethrow();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Number of indices satisfying pred.
template <class Pred>
std::uint64_t count_if_index(std::uint64_t count, Pred&& pred, Exec exec) {
    if (exec == Exec::serial) {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < count; ++i) c += pred(i) ? 1 : 0;
        return c;
    }
    std::uint64_t c = 0;
    detail::ExceptionSlot error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : c)
    for (std::int64_t s = 0; s < n; ++s) {
        try {
            c += pred(static_cast<std::uint64_t>(s)) ? 1 : 0;
        } catch (...) {
            error.capture();
        }
    }
    error.rethrow();
    return c;
}

inline int worker_count() { return omp_get_max_threads(); }

}  // namespace homfull
