// SPDX-License-Identifier: Apache-2.0
#include "boolrev/rng.hpp"

#include <limits>

namespace boolrev {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace boolrev
