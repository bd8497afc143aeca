#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace riesz {

/// Worker cap for grid sweeps and search trials.  RIESZ_THREADS overrides
/// the hardware count.
inline int max_threads() {
    static const int cached = [] {
        if (const char* env = std::getenv("RIESZ_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hc = std::thread::hardware_concurrency();
        return hc ? static_cast<int>(hc) : 1;
    }();
    return cached;
}

/// Runs body(begin, end, chunk_index) over a static partition of [0, n).
/// Chunk 0 executes on the calling thread.  Results must be merged by the
/// caller (keyed by chunk_index) so reductions stay deterministic.
template <class Body>
void parallel_chunks(std::size_t n, Body&& body) {
    const std::size_t nt =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n ? n : 1);
    if (nt <= 1) {
        body(std::size_t{0}, n, 0);
        return;
    }
    const std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    for (std::size_t c = 1; c < nt; ++c) {
        const std::size_t lo = chunk * c;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo < hi)
            pool.emplace_back([&body, lo, hi, c] { body(lo, hi, static_cast<int>(c)); });
    }
    body(std::size_t{0}, std::min(chunk, n), 0);
    for (auto& th : pool) th.join();
}

} // namespace riesz
