#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace domgame {

inline auto default_worker_count() -> int
{
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

/**
 * Evaluates `task(i)` for i in [0, count) on `workers` threads and returns the
 * results indexed by i, independent of completion order. If any task throws,
 * the exception of the lowest failing index is rethrown after all workers stop.
 */
template <typename Result, typename Task>
auto parallel_map(std::size_t count, int workers, Task && task) -> std::vector<Result>
{
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};

    auto drain = [&] {
        for (std::size_t i = next++; i < count && !failed.load(std::memory_order_relaxed); i = next++) {
            try {
                slots[i].emplace(task(i));
            }
            catch (...) {
                errors[i] = std::current_exception();
                failed = true;
            }
        }
    };

    const int threads = static_cast<int>(std::min<std::size_t>(std::max(1, workers), std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        drain();
    }
    else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(drain);
    }

    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(count);
    for (auto & slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

} // namespace domgame
