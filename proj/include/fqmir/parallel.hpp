#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fqmir {

inline unsigned effective_jobs(unsigned requested, std::size_t work_items) {
    unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (work_items < n) n = static_cast<unsigned>(work_items);
    return n == 0 ? 1 : n;
}

// Invokes f(i) exactly once per i in [0, n), possibly concurrently.
// Callers keep results deterministic by writing only to slot i; the
// assembled output then never depends on scheduling.
template <class F>
void parallel_for_indexed(std::size_t n, unsigned jobs, F&& f) {
    unsigned nj = effective_jobs(jobs, n);
    if (nj <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mx;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mx);
                if (!err) err = std::current_exception();
                next.store(n, std::memory_order_relaxed);  // drain remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nj);
    for (unsigned t = 0; t < nj; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace fqmir
