#pragma once

#include <cstdint>

namespace mbd {

// splitmix64 stream; fixed algorithm so seeded runs reproduce exactly.
struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); modulo bias is negligible for the small n used here.
  int next_below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

}  // namespace mbd
