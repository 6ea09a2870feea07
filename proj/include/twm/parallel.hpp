#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace twm {

// Static-chunked parallel index loop; results must be written to caller-owned
// slots indexed by i so output order never depends on the thread count.
template <class F>
void parallel_for(std::int64_t n, int threads, F&& body) {
    if (threads <= 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int use = std::min<int>(threads, static_cast<int>(n));
    pool.reserve(use);
    for (int t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace twm
