#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace singshadow::detail {

// Calls body(i) for i in [0, count) on up to `workers` threads. Tasks are
// claimed dynamically; results must be written to per-index slots by the caller.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body && body)
{
    std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++)
                    body(i);
            }
            catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    }
    for (auto & th : pool)
        th.join();
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace singshadow::detail
