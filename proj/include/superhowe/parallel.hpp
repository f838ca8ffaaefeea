#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace superhowe {

// Worker count: SUPERHOWE_THREADS when set (>= 1), otherwise the hardware
// concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("SUPERHOWE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(i) for i in [0, count) on up to thread_budget() threads.  Work items
// must be independent; callers keep results in pre-sized slots so that the
// merged output identical to the serial order.
template <class F>
void parallel_for(std::size_t count, F&& f) {
    const unsigned threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                f(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace superhowe
