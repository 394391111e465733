// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace boolrev {

/// A conjunction of regulator positions: bit i set means position i occurs.
using Clause = std::uint32_t;

/// Clause masks are 32 bits wide.
inline constexpr int kMaxRegulators = 32;

inline Clause fullMask(int arity) {
  return arity >= 32 ? ~Clause{0} : ((Clause{1} << arity) - 1);
}

/// Canonical clause order: by size, then lexicographically on the ascending
/// list of positions.
bool clauseLess(Clause a, Clause b);

/// Sorts into canonical order and drops duplicates.
void sortClauses(std::vector<Clause>& clauses);

/// Drops every clause that is a superset of another one, then sorts.
void minimizeClauses(std::vector<Clause>& clauses);

bool isAntichain(const std::vector<Clause>& clauses);

/// True when the DNF is neither constant nor missing any of the `arity`
/// positions. Assumes an antichain.
bool isNondegenerate(const std::vector<Clause>& clauses, int arity);

/// Evaluates the positive DNF on an input word.
inline bool evaluateDnf(const std::vector<Clause>& clauses, std::uint32_t inputs) {
  for (Clause c : clauses) {
    if ((c & ~inputs) == 0) return true;
  }
  return false;
}

/// Pointwise order of the monotone functions given as antichains:
/// true iff every minimal true point of `lower` is a true point of `upper`.
bool impliesDnf(const std::vector<Clause>& lower, const std::vector<Clause>& upper);

}  // namespace boolrev
