#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace stareig {

// Worker count for rank-range scans: STAREIG_THREADS if set (>= 1),
// otherwise the hardware concurrency, floored at 1.
inline int thread_count() {
  if (const char* env = std::getenv("STAREIG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096)
      throw std::invalid_argument("STAREIG_THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into contiguous chunks and runs fn(chunk_index, begin, end)
// on each, possibly concurrently. At most thread_count() chunks are created,
// so per-chunk result slots sized by thread_count() always suffice; combining
// slots in index order keeps the outcome independent of the worker count.
template <typename Fn>
void for_each_chunk(std::uint64_t total, Fn&& fn) {
  int workers = thread_count();
  if (total == 0) return;
  if (workers <= 1 || total < 2048) {
    fn(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::uint64_t w = static_cast<std::uint64_t>(workers);
  if (w > total) w = total;
  std::uint64_t base = total / w, extra = total % w;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  std::uint64_t begin = 0;
  for (std::uint64_t k = 0; k < w; ++k) {
    std::uint64_t len = base + (k < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&fn, k, begin, end] { fn(static_cast<std::size_t>(k), begin, end); });
    begin = end;
  }
  for (auto& t : threads) t.join();
}

}  // namespace stareig
