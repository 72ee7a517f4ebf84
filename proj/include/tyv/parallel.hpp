#pragma once

// Minimal work-sharing helper: relation instances are independent, so the
// verifier suites fan them out over a fixed number of threads.

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tyv {

inline int default_jobs() {
    if (const char* env = std::getenv("TYV_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

template <class F>
void parallel_for(std::size_t count, F&& f, int jobs = 0) {
    if (jobs <= 0) jobs = default_jobs();
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    };
    std::vector<std::thread> pool;
    int threads = std::min<std::size_t>(jobs, count);
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace tyv
