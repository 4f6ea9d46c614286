#include <gtest/gtest.h>

#include <array>

#include "kprime/rng.hpp"

using namespace kprime;

TEST(Rng, SameSeedSameStream) {
  Rng a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto const x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, BelowStaysInRange) {
  Rng r(5);
  for (std::uint64_t n : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) {
      EXPECT_LT(r.below(n), n);
    }
  }
  EXPECT_THROW(r.below(0), std::invalid_argument);
}

// Each face of a die within 5% of 10000 over 60000 rolls.
TEST(Rng, BelowIsRoughlyUniform) {
  constexpr double kTolerance = 0.05;
  Rng                        r(kDefaultSeed);
  std::array<int, 6>         counts{};
  for (int i = 0; i < 60000; ++i) {
    ++counts[r.below(6)];
  }
  for (int c : counts) {
    EXPECT_NEAR(c, 10000, 10000 * kTolerance);
  }
}

TEST(Rng, SubstreamsAreIndependentOfCallOrder) {
  auto a1 = Rng::substream(1, "x", 3);
  auto b  = Rng::substream(1, "y", 3);
  auto a2 = Rng::substream(1, "x", 3);
  EXPECT_EQ(a1.next(), a2.next());
  EXPECT_NE(Rng::substream(1, "x", 3).next(), b.next());
  EXPECT_NE(Rng::substream(1, "x", 3).next(), Rng::substream(1, "x", 4).next());
  EXPECT_NE(Rng::substream(1, "x", 3).next(), Rng::substream(2, "x", 3).next());
}

// FNV-1a reference values.
TEST(Rng, StableHashIsFnv1a) {
  EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Rng, SplitMixReference) {
  std::uint64_t s = 0;
  EXPECT_EQ(splitmix64(s), 0xe220a8397b1dcdafULL);
}
