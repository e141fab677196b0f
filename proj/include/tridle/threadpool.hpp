#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tridle {

inline unsigned default_workers() {
    if (const char* env = std::getenv("TRIDLE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs f(i) for i in [0, n). Work is handed out in fixed round-robin order,
// so any reduction the caller performs over index order is deterministic
// regardless of the worker count.
template <class F>
inline void parallel_for(size_t n, unsigned workers, F&& f) {
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    unsigned k = std::min<size_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned w = 0; w < k; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += k) f(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace tridle
