// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "boolrev/model.hpp"
#include "boolrev/observation.hpp"

namespace boolrev::detail {

/// A clause lowered to node bits: satisfied iff every `high` node is 1 and
/// every `low` node is 0.
struct NodeTerm {
  std::uint64_t high = 0;
  std::uint64_t low = 0;
};

struct CompiledRule {
  bool constant = false;
  bool value = false;
  std::vector<NodeTerm> terms;
};

CompiledRule compileRule(const NodeFunction& function, const std::vector<int>& regulators,
                         const std::vector<Sign>& signs);

/// Flat evaluation form of a model; individual rules can be swapped for
/// candidate repairs.
class Network {
 public:
  explicit Network(const Model& model);

  int size() const { return static_cast<int>(rules_.size()); }
  std::uint64_t allNodes() const { return all_; }

  bool eval(int v, std::uint64_t bits) const {
    const CompiledRule& rule = rules_[v];
    if (rule.constant) return rule.value;
    for (const NodeTerm& t : rule.terms) {
      if ((bits & t.high) == t.high && (bits & t.low) == 0) return true;
    }
    return false;
  }

  /// Synchronous image of all nodes.
  std::uint64_t image(std::uint64_t bits) const {
    std::uint64_t out = 0;
    for (int v = 0; v < size(); ++v) {
      if (eval(v, bits)) out |= std::uint64_t{1} << v;
    }
    return out;
  }

  /// Nodes whose value or regulators matter when judging node v.
  std::uint64_t dependencies(int v) const { return deps_[v]; }

  void setRule(int v, CompiledRule rule);

 private:
  std::vector<CompiledRule> rules_;
  std::vector<std::uint64_t> deps_;
  std::uint64_t all_ = 0;
};

}  // namespace boolrev::detail
