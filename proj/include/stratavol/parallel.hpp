#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stratavol {

/// Worker count used by the parallel reductions (default 1; the CLI sets it from --threads).
void set_worker_threads(int n);
int worker_threads();

/// Evaluates fn(i) for i in [0, count) on up to worker_threads() threads.
/// Results come back in index order, so any fold over them is deterministic.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, F&& fn) {
    std::vector<R> out(count);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_threads()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace stratavol
