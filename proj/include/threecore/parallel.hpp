#pragma once

#include <cstdint>
#include <functional>

namespace threecore {

// Splits [begin, end) into contiguous chunks and runs chunk_fn(lo, hi) on a
// pool of threads. workers == 0 picks hardware_concurrency. chunk_fn must be
// safe to call concurrently on disjoint ranges.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
                  unsigned workers = 0);

}  // namespace threecore
