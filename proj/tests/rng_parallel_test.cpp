#include <cyclo/parallel.hpp>
#include <cyclo/rng.hpp>

#include <gtest/gtest.h>

#include <atomic>
#include <set>
#include <stdexcept>

using cyclo::CounterRng;

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
  std::set<std::uint64_t> firsts;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
  }
  for (std::uint64_t s = 0; s < 1000; ++s) firsts.insert(CounterRng(9, s)());
  EXPECT_EQ(firsts.size(), 1000u);
}

TEST(CounterRng, BelowStaysInRangeAndIsRoughlyUniform) {
  CounterRng rng(123, 4);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
  EXPECT_EQ(rng.uniform(5, 5), 5);
}

TEST(CounterRng, CounterAdvancesPerDraw) {
  CounterRng rng(0, 0);
  EXPECT_EQ(rng.counter(), 0u);
  rng();
  rng();
  EXPECT_EQ(rng.counter(), 2u);
}

TEST(ParallelChunks, CoversRangeExactlyOnce) {
  for (unsigned threads : {1u, 2u, 4u, 7u})
    for (std::uint64_t count : {0ull, 1ull, 5ull, 1000ull}) {
      std::vector<std::atomic<int>> hits(count);
      std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges(16);
      cyclo::parallel_chunks(count, 16, threads, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
        ranges[chunk] = {begin, end};
        for (auto i = begin; i < end; ++i) ++hits[i];
      });
      for (auto& h : hits) EXPECT_EQ(h.load(), 1);
    }
}

TEST(ParallelChunks, BoundariesDoNotDependOnThreads) {
  auto boundaries = [](unsigned threads) {
    std::vector<std::uint64_t> starts(10);
    cyclo::parallel_chunks(1234, 10, threads, [&](std::size_t c, std::uint64_t b, std::uint64_t) { starts[c] = b; });
    return starts;
  };
  EXPECT_EQ(boundaries(1), boundaries(3));
  EXPECT_EQ(boundaries(1), boundaries(10));
}

TEST(ParallelChunks, RethrowsWorkerExceptions) {
  for (unsigned threads : {1u, 3u})
    EXPECT_THROW(cyclo::parallel_chunks(100, 8, threads,
                                        [](std::size_t c, std::uint64_t, std::uint64_t) {
                                          if (c == 5) throw std::runtime_error("boom");
                                        }),
                 std::runtime_error);
}
