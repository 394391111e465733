// SPDX-License-Identifier: Apache-2.0
#include "network.hpp"

#include "boolrev/error.hpp"

namespace boolrev::detail {

CompiledRule compileRule(const NodeFunction& function, const std::vector<int>& regulators,
                         const std::vector<Sign>& signs) {
  CompiledRule rule;
  if (const auto* c = std::get_if<Constant>(&function)) {
    rule.constant = true;
    rule.value = c->value;
    return rule;
  }
  for (Clause c : std::get<MonotoneFunction>(function).clauses()) {
    NodeTerm term;
    for (std::size_t i = 0; i < regulators.size(); ++i) {
      if (!((c >> i) & 1U)) continue;
      const std::uint64_t bit = std::uint64_t{1} << regulators[i];
      (signs[i] == Sign::kPositive ? term.high : term.low) |= bit;
    }
    rule.terms.push_back(term);
  }
  return rule;
}

Network::Network(const Model& model) {
  if (model.size() > kMaxStateNodes) {
    throw Error(ErrorCode::kTooLarge, "state-based analysis supports at most 64 nodes");
  }
  for (int v = 0; v < model.size(); ++v) {
    rules_.push_back(compileRule(model.function(v), model.regulators(v), model.signs(v)));
    deps_.push_back(0);
    all_ |= std::uint64_t{1} << v;
  }
  for (int v = 0; v < model.size(); ++v) setRule(v, rules_[v]);
}

void Network::setRule(int v, CompiledRule rule) {
  std::uint64_t deps = std::uint64_t{1} << v;
  for (const NodeTerm& t : rule.terms) deps |= t.high | t.low;
  deps_[v] = deps;
  rules_[v] = std::move(rule);
}

}  // namespace boolrev::detail
