// SPDX-License-Identifier: Apache-2.0
#include "boolrev/repair.hpp"

#include <algorithm>
#include <set>

#include "boolrev/error.hpp"

namespace boolrev {
namespace {

struct WorkingRule {
  NodeFunction function;
  std::vector<std::string> regulators;
  std::vector<Sign> signs;

  Sign signOf(const std::string& name) const {
    auto it = std::find(regulators.begin(), regulators.end(), name);
    if (it == regulators.end()) {
      throw Error(ErrorCode::kInvalidRepair, "'" + name + "' is not a regulator");
    }
    return signs[it - regulators.begin()];
  }
};

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidRepair, message);
}

void adopt(WorkingRule& rule, const MonotoneFunction& fn,
           const std::vector<std::pair<std::string, Sign>>& known) {
  std::vector<Sign> signs;
  for (const auto& reg : fn.regulators()) {
    auto it = std::find_if(known.begin(), known.end(), [&](const auto& p) { return p.first == reg; });
    if (it == known.end()) invalid("regulator '" + reg + "' has no edge");
    signs.push_back(it->second);
  }
  rule.function = fn;
  rule.regulators = fn.regulators();
  rule.signs = std::move(signs);
}

std::vector<std::pair<std::string, Sign>> signTable(const WorkingRule& rule) {
  std::vector<std::pair<std::string, Sign>> out;
  for (std::size_t i = 0; i < rule.regulators.size(); ++i) {
    out.emplace_back(rule.regulators[i], rule.signs[i]);
  }
  return out;
}

void applyOp(const Model& model, WorkingRule& rule, const std::string& node, const AtomicRepair& op) {
  if (repairTarget(op) != node) invalid("operation does not target node '" + node + "'");
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ChangeFunction>) {
          if (const auto* c = std::get_if<Constant>(&o.function)) {
            if (!rule.regulators.empty()) invalid("cannot make a regulated node constant");
            rule.function = *c;
            return;
          }
          const auto& fn = std::get<MonotoneFunction>(o.function);
          std::set<std::string> now(rule.regulators.begin(), rule.regulators.end());
          std::set<std::string> next(fn.regulators().begin(), fn.regulators().end());
          if (now != next) invalid("function change must keep the regulators of '" + node + "'");
          adopt(rule, fn, signTable(rule));
        } else if constexpr (std::is_same_v<T, FlipEdgeSign>) {
          auto it = std::find(rule.regulators.begin(), rule.regulators.end(), o.source);
          if (it == rule.regulators.end()) {
            invalid("no edge (" + o.source + "," + o.target + ")");
          }
          rule.signs[it - rule.regulators.begin()] = o.sign;
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          if (std::find(rule.regulators.begin(), rule.regulators.end(), o.source) ==
              rule.regulators.end()) {
            invalid("no edge (" + o.source + "," + o.target + ")");
          }
          if (o.function.position(o.source) >= 0) invalid("removed regulator still in function");
          auto table = signTable(rule);
          if (o.function.arity() + 1 != static_cast<int>(rule.regulators.size())) {
            invalid("new function must range over the remaining regulators");
          }
          adopt(rule, o.function, table);
        } else {
          if (!model.find(o.source)) invalid("unknown node '" + o.source + "'");
          if (std::find(rule.regulators.begin(), rule.regulators.end(), o.source) !=
              rule.regulators.end()) {
            invalid("duplicate edge (" + o.source + "," + o.target + ")");
          }
          auto table = signTable(rule);
          table.emplace_back(o.source, o.sign);
          if (o.function.arity() != static_cast<int>(table.size())) {
            invalid("new function must range over the extended regulators");
          }
          adopt(rule, o.function, table);
        }
      },
      op);
}

}  // namespace

const std::string& repairTarget(const AtomicRepair& op) {
  return std::visit(
      [](const auto& o) -> const std::string& {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ChangeFunction>) {
          return o.node;
        } else {
          return o.target;
        }
      },
      op);
}

Model applyRepair(const Model& model, const std::vector<NodeRepair>& choice) {
  Model out = model;
  std::set<std::string> seen;
  for (const auto& repair : choice) {
    if (!seen.insert(repair.node).second) invalid("node '" + repair.node + "' repaired twice");
    auto idx = model.find(repair.node);
    if (!idx) invalid("unknown node '" + repair.node + "'");
    WorkingRule rule{model.function(*idx), {}, model.signs(*idx)};
    for (int r : model.regulators(*idx)) rule.regulators.push_back(model.nodes()[r]);
    for (const auto& op : repair.ops) applyOp(model, rule, repair.node, op);
    try {
      out = out.withRule(*idx, std::move(rule.function), std::move(rule.signs));
    } catch (const Error& e) {
      invalid(e.what());
    }
  }
  return out;
}

}  // namespace boolrev
