#pragma once

#include <cyclo/int128.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace cyclo {

/// 0 means "use hardware concurrency".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks and runs fn(chunk_index, begin,
/// end) on up to `threads` workers. Chunk boundaries depend only on count and
/// chunks, never on the thread count, so callers can reduce per-chunk results
/// in chunk order and get identical output for any parallelism.
template <class Fn>
void parallel_chunks(std::uint64_t count, std::size_t chunks, unsigned threads, Fn&& fn) {
  chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, std::max<std::uint64_t>(count, 1)));
  const auto bounds = [&](std::size_t c) {
    return static_cast<std::uint64_t>(static_cast<uint128_t>(count) * c / chunks);
  };
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(chunks));

  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }

  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t c = t; c < chunks; c += threads) fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace cyclo
