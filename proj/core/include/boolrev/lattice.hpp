// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "boolrev/model.hpp"

namespace boolrev {

enum class Direction { kParents, kChildren };

/// Largest regulator count accepted by the neighbourhood computation.
inline constexpr int kMaxLatticeArity = 20;

/// Covers of `fn` among the non-degenerate monotone functions over the same
/// regulators: the minimal strictly greater ones (parents) or the maximal
/// strictly smaller ones (children). Sorted canonically.
std::vector<MonotoneFunction> immediateNeighbours(const MonotoneFunction& fn, Direction direction);

/// Clause-level variant over `arity` positions.
std::vector<std::vector<Clause>> immediateNeighbourClauses(const std::vector<Clause>& clauses,
                                                           int arity, Direction direction);

/// Covers in the lattice of all monotone functions (degenerate ones and the
/// constants included; constant 1 is {0}, constant 0 is {}).
std::vector<std::vector<Clause>> monotoneCovers(const std::vector<Clause>& clauses, int arity,
                                                Direction direction);

struct LatticeSearchLimits {
  int max_depth = 64;
  std::size_t max_visited = 50000;
};

struct LatticeHit {
  int distance = 0;
  std::vector<MonotoneFunction> witnesses;
};

using FunctionPredicate = std::function<bool(const MonotoneFunction&)>;

/// Breadth-first search over parents and children from `start`; returns the
/// smallest depth at which the predicate holds and every witness at that
/// depth. Throws Error(kExhausted) when the reachable family (or the search
/// limits) run out first.
LatticeHit latticeDistance(const MonotoneFunction& start, const FunctionPredicate& predicate,
                           const LatticeSearchLimits& limits = {});

/// Same search started from several functions over the same regulators.
LatticeHit latticeDistance(const std::vector<MonotoneFunction>& seeds,
                           const FunctionPredicate& predicate,
                           const LatticeSearchLimits& limits = {});

/// Nearest non-degenerate functions to a possibly degenerate clause set
/// (itself if non-degenerate), by cover steps in the full monotone lattice.
std::vector<std::vector<Clause>> nearestNondegenerate(const std::vector<Clause>& clauses, int arity);

}  // namespace boolrev
