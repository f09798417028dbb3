#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace riesz {

/// Worker cap: RIESZ_THREADS when set, hardware concurrency otherwise.
inline int worker_count() {
    if (const char* env = std::getenv("RIESZ_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Index-based parallel loop. Results must be written to per-index slots so
/// the output is identical for any worker count.
template <class F>
void parallel_for(int n, F&& f) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=]() {
            for (int i = w; i < n; i += workers) f(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace riesz
