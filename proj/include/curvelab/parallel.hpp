#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace curvelab {

// Worker cap: CURVELAB_THREADS if set, else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("CURVELAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Splits [0, n) into contiguous chunks, one worker each, and calls
// fn(chunk_index, begin, end). Chunks are merged by the caller in chunk order,
// so results are deterministic regardless of the worker count.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn, std::size_t min_grain = 256) {
    if (n == 0) return;
    std::size_t workers = thread_budget();
    if (workers > n / min_grain) workers = n / min_grain ? n / min_grain : 1;
    if (workers <= 1) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t b = w * chunk;
        std::size_t e = b + chunk < n ? b + chunk : n;
        if (b >= e) break;
        pool.emplace_back([&fn, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace curvelab
