#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace qlaem {

// Runs fn(begin, end) over a partition of [0, n) using `threads` workers.
// Every index is written by exactly one worker and no reductions happen
// inside the region, so the result is bitwise independent of the worker
// count.  threads <= 1 runs inline.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    const auto workers = static_cast<std::size_t>(threads);
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        if (begin >= n) break;
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qlaem
