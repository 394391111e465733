// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "boolrev/model.hpp"

namespace boolrev {

/// One minimum-cardinality set of nodes that, once freed, makes every
/// profile satisfiable.
struct InconsistentSet {
  std::vector<std::string> nodes;
  std::vector<std::string> profiles;

  friend bool operator==(const InconsistentSet&, const InconsistentSet&) = default;
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<InconsistentSet> sets;

  friend bool operator==(const ConsistencyReport&, const ConsistencyReport&) = default;
};

/// Replaces the function of `node`; regulators stay the same (signs are
/// taken from the model by name).
struct ChangeFunction {
  std::string node;
  NodeFunction function;
  friend bool operator==(const ChangeFunction&, const ChangeFunction&) = default;
};

struct FlipEdgeSign {
  std::string source;
  std::string target;
  Sign sign = Sign::kPositive;
  friend bool operator==(const FlipEdgeSign&, const FlipEdgeSign&) = default;
};

/// `function` ranges over the remaining regulators of `target`.
struct RemoveEdge {
  std::string source;
  std::string target;
  MonotoneFunction function;
  friend bool operator==(const RemoveEdge&, const RemoveEdge&) = default;
};

/// `function` ranges over the regulators of `target` plus `source`.
struct AddEdge {
  std::string source;
  std::string target;
  Sign sign = Sign::kPositive;
  MonotoneFunction function;
  friend bool operator==(const AddEdge&, const AddEdge&) = default;
};

using AtomicRepair = std::variant<ChangeFunction, FlipEdgeSign, RemoveEdge, AddEdge>;

/// Bundle of atomic operations on a single node, applied in order.
struct NodeRepair {
  std::string node;
  std::vector<AtomicRepair> ops;

  int cost() const { return static_cast<int>(ops.size()); }
  friend bool operator==(const NodeRepair&, const NodeRepair&) = default;
};

/// A repair for a whole node set: for every node, equally cheap alternative
/// NodeRepairs, any combination of which repairs the model.
struct Solution {
  std::vector<std::pair<std::string, std::vector<NodeRepair>>> nodes;
  int total_operations = 0;
  bool sub_optimal = false;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Applies one NodeRepair per node. Throws Error(kInvalidRepair).
Model applyRepair(const Model& model, const std::vector<NodeRepair>& choice);

/// Node touched by an atomic operation.
const std::string& repairTarget(const AtomicRepair& op);

}  // namespace boolrev
