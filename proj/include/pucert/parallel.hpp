#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace pucert {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.  Work is claimed from a
// shared counter; callers collect results indexed by i, so the merged output
// is independent of scheduling.
inline void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    int threads = std::min(jobs, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace pucert
