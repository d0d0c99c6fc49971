#pragma once

#include <thread>
#include <vector>
#include <functional>
#include <algorithm>

namespace tbd {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Static block partition of [begin, end). Workers write to disjoint,
/// index-addressed slots only, so results are identical for any thread
/// count; reductions happen afterwards in index order.
template <typename Fn>
void parallel_for(int64_t begin, int64_t end, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    const int64_t n = end - begin;
    if (n <= 0) return;
    if (threads <= 1 || n == 1) {
        for (int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const int nworkers = static_cast<int>(std::min<int64_t>(threads, n));
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    const int64_t chunk = (n + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
        const int64_t lo = begin + w * chunk;
        const int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace tbd
