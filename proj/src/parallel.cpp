#include "threecore/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace threecore {

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
                  unsigned workers) {
  if (begin >= end) return;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t span = end - begin;
  workers = static_cast<unsigned>(
      std::min<std::int64_t>(workers, span));
  if (workers <= 1) {
    chunk_fn(begin, end);
    return;
  }
  const std::int64_t chunk = (span + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = begin + chunk * w;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&chunk_fn, lo, hi] { chunk_fn(lo, hi); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace threecore
