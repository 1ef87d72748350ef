#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dbasis {

/// 0 means one worker per hardware thread.
inline std::size_t resolve_workers(std::size_t requested) {
    if (requested != 0) return requested;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls functor(i) for every i in [begin, end) on up to `workers` threads.
/// Indices are handed out dynamically; the first exception is rethrown once
/// all threads have joined.
template <typename Functor>
void parallel_for(std::size_t begin, std::size_t end, std::size_t workers, Functor functor) {
    workers = std::min(resolve_workers(workers), end > begin ? end - begin : std::size_t{0});
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) functor(i);
        return;
    }
    std::atomic<std::size_t> counter{begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        threads.emplace_back([&] {
            try {
                std::size_t i;
                while ((i = counter++) < end) functor(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                counter = end;
            }
        });
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace dbasis
