#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace juliahull {

/// Worker count: JULIAHULL_THREADS if set and positive, otherwise the
/// hardware concurrency (0 means auto).
inline unsigned workerCount()
{
    if (const char* env = std::getenv("JULIAHULL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, n) over contiguous chunks. Each index is
/// handled exactly once, so writes to slot i are race free. The first
/// exception thrown by any worker is rethrown on the caller.
template <class Body>
void parallelFor(std::size_t n, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(workerCount(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex errorMutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(errorMutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace juliahull
