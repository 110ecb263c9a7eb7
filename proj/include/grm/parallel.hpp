#pragma once

// Deterministic data-parallel helper. Work items write disjoint outputs, so
// results are identical regardless of the worker count. GRMDIST_THREADS caps
// the number of workers (default: hardware concurrency).

#include <cstdint>
#include <functional>

namespace grm {

std::size_t worker_count();

// Splits [0, n) into contiguous chunks and runs chunk_fn(begin, end) on each,
// possibly concurrently. min_items_per_worker sets the spawn granularity:
// loops smaller than one chunk run inline. Pass 1 for heavyweight items.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
                  std::int64_t min_items_per_worker = 64);

}  // namespace grm
