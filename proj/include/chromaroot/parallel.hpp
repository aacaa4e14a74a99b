#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace chromaroot {

// Run fn(0..count-1) on up to `jobs` worker threads. Callers own result
// placement (one slot per index), which keeps merged output independent of
// scheduling.
template <typename Fn>
void parallel_over(std::size_t count, int jobs, const Fn& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(spawn);
    for (std::size_t i = 0; i < spawn; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace chromaroot
