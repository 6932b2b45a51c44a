#ifndef SYSCODES_PARALLEL_H
#define SYSCODES_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace syscodes {

/// Worker cap from SYSCODES_THREADS (unset or 0 means hardware concurrency).
size_t worker_count();

/// Runs fn(i) for every i in [0, count). Work items are claimed from a shared
/// counter, so callers must not depend on execution order.
template <typename Fn>
void parallel_for(size_t count, Fn &&fn) {
    size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    auto body = [&]() {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            fn(i);
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (size_t t = 1; t < workers; t++) {
        pool.emplace_back(body);
    }
    body();
}

}  // namespace syscodes

#endif
