#include "grm/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace grm {

std::size_t worker_count() {
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GRMDIST_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
        } catch (...) {
            // unparsable value: keep the default
        }
    }
    return n;
}

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
                  std::int64_t min_items_per_worker) {
    if (n <= 0) return;
    const std::int64_t by_granularity = std::max<std::int64_t>(1, n / std::max<std::int64_t>(1, min_items_per_worker));
    const std::size_t workers = std::min<std::size_t>(worker_count(), static_cast<std::size_t>(std::min<std::int64_t>(n, by_granularity)));
    if (workers <= 1) {
        chunk_fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t chunk = (n + static_cast<std::int64_t>(workers) - 1) / static_cast<std::int64_t>(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
        const std::int64_t end = std::min<std::int64_t>(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(chunk_fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace grm
