#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rtf {

// Worker cap from RT_FORGE_THREADS, else hardware concurrency (clamped).
inline int worker_count() {
    if (const char* env = std::getenv("RT_FORGE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return int(hw ? std::min(hw, 16u) : 1);
}

// Runs f(i) for i in [0, n). Work items must be independent; any merging is
// done by the caller over index order, so results match a serial run.
template <class F>
void parallel_for(int n, F&& f) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) f(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace rtf
