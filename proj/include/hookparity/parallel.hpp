#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hookparity {

inline long default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<long>(hw);
}

// Runs fn(i) for i in [begin, end) over a small thread pool. Workers pull
// indices from a shared counter; callers that need determinism store results
// per index and reduce in order afterwards.
inline void parallel_for(long begin, long end, const std::function<void(long)>& fn,
                         long threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    const long count = end - begin;
    if (count <= 0) return;
    if (threads == 1 || count == 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    if (threads > count) threads = count;
    std::atomic<long> next(begin);
    std::exception_ptr error;
    std::atomic<bool> failed(false);
    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            const long i = next.fetch_add(1);
            if (i >= end) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (long i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hookparity
