// SPDX-License-Identifier: Apache-2.0
#include "boolrev/clause.hpp"

#include <algorithm>
#include <bit>

namespace boolrev {

bool clauseLess(Clause a, Clause b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const Clause diff = a ^ b;
  if (diff == 0) return false;
  // The smaller position list has the lowest differing position.
  const Clause lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

void sortClauses(std::vector<Clause>& clauses) {
  std::sort(clauses.begin(), clauses.end(), clauseLess);
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
}

void minimizeClauses(std::vector<Clause>& clauses) {
  sortClauses(clauses);
  std::vector<Clause> kept;
  kept.reserve(clauses.size());
  // Sorted by size, so any subset of c precedes it.
  for (Clause c : clauses) {
    bool absorbed = false;
    for (Clause k : kept) {
      if ((k & ~c) == 0) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(c);
  }
  clauses = std::move(kept);
}

bool isAntichain(const std::vector<Clause>& clauses) {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (i != j && (clauses[i] & ~clauses[j]) == 0) return false;
    }
  }
  return true;
}

bool isNondegenerate(const std::vector<Clause>& clauses, int arity) {
  if (clauses.empty()) return false;
  Clause used = 0;
  for (Clause c : clauses) {
    if (c == 0) return false;
    used |= c;
  }
  return used == fullMask(arity);
}

bool impliesDnf(const std::vector<Clause>& lower, const std::vector<Clause>& upper) {
  for (Clause c : lower) {
    if (!evaluateDnf(upper, c)) return false;
  }
  return true;
}

}  // namespace boolrev
