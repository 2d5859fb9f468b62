#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rtkit {

inline unsigned effective_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested == 0) return hw;
    return requested < hw ? requested : hw;
}

// Static block partition; fn(i) must only touch state owned by index i, so
// results are identical for any thread count.
template <class F>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, F&& fn) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    threads = effective_threads(threads);
    if (threads <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = begin + t * chunk;
        const std::size_t hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace rtkit
