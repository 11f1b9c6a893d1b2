// sweep.hpp — deterministic index-parallel evaluation for grids and series

#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qzc/errors.hpp"

namespace qzc {

// --workers beats QZC_WORKERS beats 1.
inline int resolve_workers(std::optional<int> requested) {
    int w = 1;
    if (requested) {
        w = *requested;
    } else if (const char* env = std::getenv("QZC_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1 || parsed > 4096)
            throw validation_error("QZC_WORKERS must be an integer in [1, 4096], got '" +
                                   std::string(env) + "'");
        w = static_cast<int>(parsed);
    }
    if (w < 1) throw validation_error("workers must be >= 1, got " + std::to_string(w));
    return w;
}

// Runs fn(i) for i in [0, n). Each index is computed exactly once and the
// caller stores results by index, so output is identical for any worker
// count. First exception wins and is rethrown after the pool joins.
template <class F>
inline void parallel_for(std::size_t n, int workers, F&& fn) {
    if (n == 0) return;
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers < 1 ? 1 : workers), n);
    if (nw == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::mutex mu;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t t = 0; t < nw; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += nw) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace qzc
