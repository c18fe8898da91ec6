#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qwalk::detail {

// Evaluates fn(inputs[i]) for every i, possibly on several threads. Results
// keep input order. The first exception thrown by any call is rethrown.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn) {
    using Out = decltype(fn(inputs.front()));
    std::vector<Out> out(inputs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            try {
                out[i] = fn(inputs[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };

    const std::size_t threads =
        std::min<std::size_t>(inputs.size(), std::max(1u, std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t k = 1; k < threads; ++k) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace qwalk::detail
