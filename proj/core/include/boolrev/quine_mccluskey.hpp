// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "boolrev/expr.hpp"

namespace boolrev {

/// A product term: variable j occurs iff bit j of `care` is set, positively
/// iff bit j of `value` is also set. The empty implicant is the tautology.
struct Implicant {
  std::uint32_t care = 0;
  std::uint32_t value = 0;

  bool covers(std::uint32_t row) const { return ((row ^ value) & care) == 0; }
  friend auto operator<=>(const Implicant&, const Implicant&) = default;
};

/// Every prime implicant of the table, sorted. Empty for the constant-0 table.
std::vector<Implicant> quineMcCluskey(const TruthTable& table);

}  // namespace boolrev
