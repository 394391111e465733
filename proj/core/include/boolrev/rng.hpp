// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace boolrev {

/// Seedable generator with platform-independent draws: mt19937_64 output is
/// fixed by the standard and bounded draws use rejection sampling rather than
/// the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent seed for sub-stream `index`.
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace boolrev
