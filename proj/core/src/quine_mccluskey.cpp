// SPDX-License-Identifier: Apache-2.0
#include "boolrev/quine_mccluskey.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace boolrev {

std::vector<Implicant> quineMcCluskey(const TruthTable& table) {
  const int n = table.arity();
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);

  // Current generation, grouped by the number of don't-care positions
  // (identical across a generation) then by popcount of value.
  std::set<Implicant> current;
  for (std::uint64_t r = 0; r < table.rows(); ++r) {
    if (table.get(r)) current.insert({all, static_cast<std::uint32_t>(r)});
  }

  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::map<std::uint32_t, std::vector<Implicant>> by_mask;
    for (const auto& imp : current) by_mask[imp.care].push_back(imp);

    std::set<Implicant> next;
    std::set<Implicant> merged;
    for (auto& [care, group] : by_mask) {
      std::map<int, std::vector<Implicant>> by_ones;
      for (const auto& imp : group) by_ones[std::popcount(imp.value)].push_back(imp);
      for (auto& [ones, low] : by_ones) {
        auto high = by_ones.find(ones + 1);
        if (high == by_ones.end()) continue;
        for (const auto& a : low) {
          for (const auto& b : high->second) {
            const std::uint32_t diff = a.value ^ b.value;
            if (std::has_single_bit(diff) && (b.value & diff)) {
              next.insert({care & ~diff, a.value & ~diff});
              merged.insert(a);
              merged.insert(b);
            }
          }
        }
      }
    }
    for (const auto& imp : current) {
      if (!merged.count(imp)) primes.push_back(imp);
    }
    current = std::move(next);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace boolrev
