#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace ffdioph {

/// Deterministic parallel map: applies fn to 0..count-1 on `jobs` threads and
/// hands the results to `merge` in index order, so the outcome is identical
/// for any job count.
template <class R>
void parallel_map_ordered(size_t count, int jobs, const std::function<R(size_t)>& fn,
                          const std::function<void(size_t, R&&)>& merge) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) merge(i, fn(i));
        return;
    }
    const size_t nthreads = size_t(jobs);
    std::vector<std::vector<R>> results(nthreads);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(nthreads);
    for (size_t w = 0; w < nthreads; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (size_t i = w; i < count; i += nthreads) results[w].push_back(fn(i));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<size_t> next(nthreads, 0);
    for (size_t i = 0; i < count; ++i) {
        const size_t w = i % nthreads;
        merge(i, std::move(results[w][next[w]++]));
    }
}

}  // namespace ffdioph
