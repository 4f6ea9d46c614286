#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace kprime {

  inline constexpr std::uint64_t kDefaultSeed = 20260101;

  std::uint64_t splitmix64(std::uint64_t& state);
  // FNV-1a, used to derive per-label substreams that do not depend on the
  // standard library's hash.
  std::uint64_t stable_hash(std::string_view s);

  // mt19937_64 with a portable bounded draw, so a seed reproduces the same
  // stream on every platform (std distributions are implementation-defined).
  class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next() {
      return _gen();
    }
    // Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    bool          chance(std::uint64_t num, std::uint64_t den) {
      return below(den) < num;
    }
    // An independent stream keyed by a label and an index.
    static Rng substream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

   private:
    std::mt19937_64 _gen;
  };

}  // namespace kprime
