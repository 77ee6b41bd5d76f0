#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace phase_amp::detail {

// Splits [begin, end) into contiguous chunks, runs `work(chunk_begin,
// chunk_end)` on each (possibly in parallel) and returns the per-chunk results
// in range order, so any fold over them is deterministic.
template <typename Result, typename Work>
std::vector<Result> map_chunks(std::uint64_t begin, std::uint64_t end, Work work) {
  constexpr std::uint64_t kSerialCutoff = std::uint64_t{1} << 16;
  const std::uint64_t total = end > begin ? end - begin : 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (total < kSerialCutoff) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

  std::vector<Result> results(threads);
  const std::uint64_t step = (total + threads - 1) / threads;
  if (threads == 1) {
    results[0] = work(begin, end);
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + std::min(total, step * t);
    const std::uint64_t hi = begin + std::min(total, step * (t + 1));
    pool.emplace_back([&results, &work, t, lo, hi] { results[t] = work(lo, hi); });
  }
  pool.clear();  // joins
  return results;
}

}  // namespace phase_amp::detail
