#include "kprime/rng.hpp"

#include <stdexcept>

namespace kprime {

  std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t stable_hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state))};
    _gen.seed(seq);
  }

  std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
      throw std::invalid_argument("Rng::below(0)");
    }
    // Rejection keeps the draw unbiased: accept only below the largest
    // multiple of n.
    std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t       v;
    do {
      v = _gen();
    } while (v >= limit);
    return v % n;
  }

  Rng Rng::substream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t state = seed ^ stable_hash(label);
    std::uint64_t mixed = splitmix64(state);
    state               = mixed + index;
    return Rng(splitmix64(state));
  }

}  // namespace kprime
