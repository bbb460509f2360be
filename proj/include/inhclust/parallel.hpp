// parallel.hpp - deterministic index-parallel loop
#ifndef INHCLUST_PARALLEL_HPP
#define INHCLUST_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace inhclust {

// Worker count: INHCLUST_THREADS if set, otherwise the hardware default.
inline int thread_count() {
    if (const char* env = std::getenv("INHCLUST_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs body(i) for i in [0, n). Each index must write only its own output
// slot; results are then identical regardless of the thread count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& body) {
    int threads = thread_count();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    if (static_cast<std::size_t>(threads) > n) threads = static_cast<int>(n);

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = chunk * static_cast<std::size_t>(t);
        std::size_t hi = lo + chunk < n ? lo + chunk : n;
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi]() {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace inhclust

#endif // INHCLUST_PARALLEL_HPP
