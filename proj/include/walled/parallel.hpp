// Tiny index-parallel map.  WALLED_THREADS caps the worker count; results
// must be written to per-index slots so output stays deterministic.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace walled {

inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("WALLED_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) budget = std::min(budget, cap);
    }
    return budget;
}

template <class F>
void parallel_for(std::size_t count, F&& fn) {
    const int workers = std::min<std::size_t>(thread_budget(), count ? count : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += workers) fn(i);
        });
    for (auto& th : threads) th.join();
}

}  // namespace walled
