#pragma once

/**
 * @file sweep.hpp
 * @brief Order-preserving parallel map used by table and verification sweeps.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace rqf {

/**
 * Applies fn to every item on up to `jobs` threads. Results come back in input
 * order, so output is identical for any worker count. The first exception
 * thrown by fn is rethrown on the calling thread.
 */
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, unsigned jobs, Fn fn) -> std::vector<std::invoke_result_t<Fn&, const T&>> {
    using R = std::invoke_result_t<Fn&, const T&>;
    std::vector<R> out(items.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace rqf
