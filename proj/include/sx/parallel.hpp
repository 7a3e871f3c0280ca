#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sx {

namespace detail {
inline std::atomic<unsigned>& thread_limit_slot() {
    static std::atomic<unsigned> limit{0}; // 0 = hardware concurrency
    return limit;
}
} // namespace detail

/// Caps the worker threads used by per-source loops. 0 restores the default.
inline void set_thread_limit(unsigned n) { detail::thread_limit_slot() = n; }

/// Reads SX_THREADS; unset or unparsable values leave the limit unchanged.
inline void thread_limit_from_env() {
    if (const char* env = std::getenv("SX_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) set_thread_limit(static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
    }
}

inline unsigned thread_limit() {
    const unsigned set = detail::thread_limit_slot();
    if (set) return set;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into per-index slots and reduce afterwards in index order, so results
/// do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_limit(), n);
    if (workers <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        try {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace sx
