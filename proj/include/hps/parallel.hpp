#ifndef HPS_PARALLEL_HPP
#define HPS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hps {

/// Number of workers used when a caller passes 0 ("use the machine").
inline int hardware_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

/// Runs fn(0..n-1) across `workers` threads with dynamic dispatch.
///
/// Each index is processed by exactly one thread, so outputs written to
/// per-index slots are bitwise-independent of the worker count. The first
/// exception thrown by any task is rethrown on the calling thread after all
/// threads join.
template <typename Fn>
void parallel_for(int n, int workers, Fn&& fn) {
    if (n <= 0) return;
    if (workers <= 0) workers = hardware_workers();
    if (workers == 1 || n == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min(workers, n);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hps

#endif
