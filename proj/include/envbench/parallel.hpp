#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace envbench {

inline unsigned default_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n). Work items are independent; callers that
// need deterministic output write results into slot i. Thread count only
// affects scheduling, never the result.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    if (threads == 0) threads = default_threads();
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    const std::size_t block = std::max<std::size_t>(1, n / (static_cast<std::size_t>(threads) * 8));

    std::atomic<std::size_t> cursor{0};
    std::mutex err_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t begin = cursor.fetch_add(block);
                if (begin >= n) return;
                const std::size_t end = std::min(n, begin + block);
                for (std::size_t i = begin; i < end; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace envbench
