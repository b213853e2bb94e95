#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spassoc {

/// Caps the number of worker threads used by parallel loops.
/// 0 restores the default (hardware concurrency).
void set_max_threads(int threads);
int max_threads();

namespace detail {

/// True on threads spawned by parallel_blocks; nested parallel loops run
/// inline on such threads instead of spawning again.
inline bool& inside_worker() {
    thread_local bool flag = false;
    return flag;
}

/// Runs f(begin, end) over contiguous blocks partitioning [0, count), one
/// block per worker. Each index must write only to its own output slots;
/// the block partition is then irrelevant to the result, so any thread
/// count produces bit-identical output.
template <class F>
void parallel_blocks(std::int64_t count, F&& f) {
    if (count <= 0) return;
    const int workers = static_cast<int>(std::min<std::int64_t>(max_threads(), count));
    if (workers <= 1 || inside_worker()) {
        f(std::int64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::int64_t block = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = w * block;
        const std::int64_t end = std::min(count, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            inside_worker() = true;
            try {
                f(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Per-index variant of parallel_blocks.
template <class F>
void parallel_for(std::int64_t count, F&& f) {
    parallel_blocks(count, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) f(i);
    });
}

}  // namespace detail
}  // namespace spassoc
