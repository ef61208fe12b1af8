#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace tverberg {

/// Runs f(i) for i in [0, n), fanning out over `threads` workers when asked.
/// Work items are claimed from a shared counter; f must be safe to call
/// concurrently for distinct i. Exceptions are rethrown on the caller.
template <class F>
void parallel_for(long n, int threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int nw = threads < static_cast<int>(n) ? threads : static_cast<int>(n);
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load() && err) std::rethrow_exception(err);
}

} // namespace tverberg
