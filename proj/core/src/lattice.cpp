// SPDX-License-Identifier: Apache-2.0
#include "boolrev/lattice.hpp"

#include <algorithm>
#include <set>

#include "boolrev/error.hpp"

namespace boolrev {
namespace {

using ClauseSet = std::vector<Clause>;

struct ClauseSetLess {
  bool operator()(const ClauseSet& a, const ClauseSet& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), clauseLess);
  }
};

using ClauseSetSet = std::set<ClauseSet, ClauseSetLess>;

void checkArity(int arity) {
  if (arity < 0 || arity > kMaxLatticeArity) {
    throw Error(ErrorCode::kTooLarge, "lattice neighbourhood limited to " +
                                          std::to_string(kMaxLatticeArity) + " regulators");
  }
}

// Minimal hitting sets of the family (Berge's incremental algorithm).
std::vector<Clause> minimalTransversals(const ClauseSet& family) {
  std::vector<Clause> current{0};
  for (Clause c : family) {
    std::vector<Clause> next;
    for (Clause t : current) {
      if (t & c) {
        next.push_back(t);
        continue;
      }
      for (Clause rest = c; rest; rest &= rest - 1) next.push_back(t | (rest & (~rest + 1)));
    }
    minimizeClauses(next);
    current = std::move(next);
  }
  return current;
}

std::vector<ClauseSet> filterExtremes(const ClauseSetSet& found, Direction direction) {
  std::vector<ClauseSet> out;
  for (const auto& g : found) {
    bool extreme = true;
    for (const auto& h : found) {
      if (&g == &h) continue;
      const bool h_below_g = impliesDnf(h, g);
      if (direction == Direction::kParents ? h_below_g : impliesDnf(g, h)) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<ClauseSet> monotoneCovers(const ClauseSet& clauses, int arity, Direction direction) {
  checkArity(arity);
  const Clause full = fullMask(arity);
  std::vector<ClauseSet> out;
  if (direction == Direction::kParents) {
    for (Clause t : minimalTransversals(clauses)) {
      const Clause point = full & ~t;
      ClauseSet next;
      for (Clause c : clauses) {
        if (point & ~c) next.push_back(c);
      }
      next.push_back(point);
      sortClauses(next);
      out.push_back(std::move(next));
    }
  } else {
    for (std::size_t k = 0; k < clauses.size(); ++k) {
      const Clause removed = clauses[k];
      ClauseSet next;
      for (std::size_t j = 0; j < clauses.size(); ++j) {
        if (j != k) next.push_back(clauses[j]);
      }
      const std::size_t others = next.size();
      for (int y = 0; y < arity; ++y) {
        const Clause grown = removed | (Clause{1} << y);
        if (grown == removed) continue;
        bool absorbed = false;
        for (std::size_t j = 0; j < others && !absorbed; ++j) {
          absorbed = (next[j] & ~grown) == 0;
        }
        if (!absorbed) next.push_back(grown);
      }
      sortClauses(next);
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), ClauseSetLess{});
  return out;
}

std::vector<ClauseSet> immediateNeighbourClauses(const ClauseSet& clauses, int arity,
                                                 Direction direction) {
  checkArity(arity);
  ClauseSetSet visited{clauses};
  ClauseSetSet found;
  std::vector<ClauseSet> frontier{clauses};
  while (!frontier.empty()) {
    std::vector<ClauseSet> next;
    for (const auto& f : frontier) {
      for (auto& g : monotoneCovers(f, arity, direction)) {
        if (!visited.insert(g).second) continue;
        if (isNondegenerate(g, arity)) {
          found.insert(g);
        } else {
          next.push_back(std::move(g));
        }
      }
    }
    frontier = std::move(next);
  }
  return filterExtremes(found, direction);
}

std::vector<MonotoneFunction> immediateNeighbours(const MonotoneFunction& fn, Direction direction) {
  std::vector<MonotoneFunction> out;
  for (auto& clauses : immediateNeighbourClauses(fn.clauses(), fn.arity(), direction)) {
    out.push_back(fn.withClauses(std::move(clauses)));
  }
  return out;
}

std::vector<ClauseSet> nearestNondegenerate(const ClauseSet& clauses, int arity) {
  checkArity(arity);
  if (isNondegenerate(clauses, arity)) return {clauses};
  ClauseSetSet visited{clauses};
  std::vector<ClauseSet> frontier{clauses};
  while (!frontier.empty()) {
    ClauseSetSet hits;
    std::vector<ClauseSet> next;
    for (const auto& f : frontier) {
      for (auto dir : {Direction::kParents, Direction::kChildren}) {
        for (auto& g : monotoneCovers(f, arity, dir)) {
          if (!visited.insert(g).second) continue;
          if (isNondegenerate(g, arity)) hits.insert(g);
          next.push_back(std::move(g));
        }
      }
    }
    if (!hits.empty()) return {hits.begin(), hits.end()};
    frontier = std::move(next);
  }
  return {};
}

LatticeHit latticeDistance(const MonotoneFunction& start, const FunctionPredicate& predicate,
                           const LatticeSearchLimits& limits) {
  return latticeDistance(std::vector<MonotoneFunction>{start}, predicate, limits);
}

LatticeHit latticeDistance(const std::vector<MonotoneFunction>& seeds,
                           const FunctionPredicate& predicate, const LatticeSearchLimits& limits) {
  if (seeds.empty()) throw Error(ErrorCode::kExhausted, "no start function");
  const MonotoneFunction& proto = seeds.front();
  checkArity(proto.arity());

  ClauseSetSet visited;
  std::vector<ClauseSet> frontier;
  for (const auto& s : seeds) {
    if (visited.insert(s.clauses()).second) frontier.push_back(s.clauses());
  }
  std::sort(frontier.begin(), frontier.end(), ClauseSetLess{});

  for (int depth = 0; !frontier.empty(); ++depth) {
    LatticeHit hit{depth, {}};
    for (const auto& f : frontier) {
      MonotoneFunction candidate = proto.withClauses(f);
      if (predicate(candidate)) hit.witnesses.push_back(std::move(candidate));
    }
    if (!hit.witnesses.empty()) return hit;
    if (depth >= limits.max_depth) {
      throw Error(ErrorCode::kExhausted, "lattice search depth limit reached");
    }
    std::vector<ClauseSet> next;
    for (const auto& f : frontier) {
      for (auto dir : {Direction::kParents, Direction::kChildren}) {
        for (auto& g : immediateNeighbourClauses(f, proto.arity(), dir)) {
          if (visited.insert(g).second) next.push_back(std::move(g));
        }
      }
      if (visited.size() > limits.max_visited) {
        throw Error(ErrorCode::kExhausted, "lattice search visit limit reached");
      }
    }
    std::sort(next.begin(), next.end(), ClauseSetLess{});
    frontier = std::move(next);
  }
  throw Error(ErrorCode::kExhausted, "no function in the reachable family satisfies the predicate");
}

}  // namespace boolrev
