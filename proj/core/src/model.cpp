// SPDX-License-Identifier: Apache-2.0
#include "boolrev/model.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "boolrev/error.hpp"

namespace boolrev {

std::string_view signName(Sign s) {
  return s == Sign::kPositive ? "positive" : "negative";
}

bool isValidNodeId(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); });
}

MonotoneFunction::MonotoneFunction(std::vector<std::string> regulators, std::vector<Clause> clauses)
    : regulators_(std::move(regulators)), clauses_(std::move(clauses)) {
  const int n = arity();
  if (n == 0 || n > kMaxRegulators) {
    throw Error(ErrorCode::kInvalidModel,
                "a regulatory function needs between 1 and 32 regulators");
  }
  std::set<std::string_view> seen;
  for (const auto& r : regulators_) {
    if (!seen.insert(r).second) {
      throw Error(ErrorCode::kInvalidModel, "duplicate regulator '" + r + "'");
    }
  }
  if (clauses_.empty()) throw Error(ErrorCode::kInvalidModel, "empty clause set");
  for (Clause c : clauses_) {
    if (c == 0 || (c & ~fullMask(n)) != 0) {
      throw Error(ErrorCode::kInvalidModel, "clause outside the regulator range");
    }
  }
  sortClauses(clauses_);
  if (!isAntichain(clauses_)) {
    throw Error(ErrorCode::kInvalidModel, "clause set is not irredundant (a clause contains another)");
  }
  Clause used = 0;
  for (Clause c : clauses_) used |= c;
  if (used != fullMask(n)) {
    const int missing = std::countr_zero(~used & fullMask(n));
    throw Error(ErrorCode::kDegenerateFunction,
                "regulator '" + regulators_[missing] + "' is not essential");
  }
}

MonotoneFunction MonotoneFunction::fromNames(std::vector<std::string> regulators,
                                             const std::vector<std::vector<std::string>>& clauses) {
  std::vector<Clause> masks;
  for (const auto& clause : clauses) {
    Clause c = 0;
    for (const auto& name : clause) {
      auto it = std::find(regulators.begin(), regulators.end(), name);
      if (it == regulators.end()) {
        throw Error(ErrorCode::kUnknownVariable, "'" + name + "' is not a regulator");
      }
      c |= Clause{1} << (it - regulators.begin());
    }
    masks.push_back(c);
  }
  return MonotoneFunction(std::move(regulators), std::move(masks));
}

int MonotoneFunction::position(std::string_view name) const {
  for (int i = 0; i < arity(); ++i) {
    if (regulators_[i] == name) return i;
  }
  return -1;
}

Model Model::create(std::vector<std::string> nodes, const std::vector<Edge>& edges,
                    const std::map<std::string, NodeFunction>& functions, ModelFormat format) {
  Model model;
  model.format_ = format;
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!isValidNodeId(nodes[i])) {
      throw Error(ErrorCode::kInvalidModel, "invalid node identifier '" + nodes[i] + "'");
    }
    if (i > 0 && nodes[i] == nodes[i - 1]) {
      throw Error(ErrorCode::kInvalidModel, "duplicate node '" + nodes[i] + "'");
    }
  }
  model.nodes_ = std::move(nodes);
  model.rules_.resize(model.nodes_.size());

  std::map<std::pair<std::string, std::string>, Sign> edge_signs;
  for (const auto& e : edges) {
    model.index(e.source);
    model.index(e.target);
    if (!edge_signs.emplace(std::make_pair(e.source, e.target), e.sign).second) {
      throw Error(ErrorCode::kInvalidModel,
                  "duplicate edge (" + e.source + "," + e.target + ")");
    }
  }

  for (int v = 0; v < model.size(); ++v) {
    const auto& name = model.nodes_[v];
    auto it = functions.find(name);
    if (it == functions.end()) {
      throw Error(ErrorCode::kInvalidModel, "node '" + name + "' has no regulatory function");
    }
    std::vector<Sign> signs;
    if (const auto* fn = std::get_if<MonotoneFunction>(&it->second)) {
      for (const auto& reg : fn->regulators()) {
        auto e = edge_signs.find({reg, name});
        if (e == edge_signs.end()) {
          throw Error(ErrorCode::kInvalidModel,
                      "regulator '" + reg + "' of '" + name + "' has no edge");
        }
        signs.push_back(e->second);
        edge_signs.erase(e);
      }
    }
    model.bindRule(v, it->second, std::move(signs));
  }
  if (!edge_signs.empty()) {
    const auto& [key, sign] = *edge_signs.begin();
    throw Error(ErrorCode::kInvalidModel, "edge (" + key.first + "," + key.second +
                                              ") does not appear in the target's function");
  }
  if (functions.size() != model.nodes_.size()) {
    throw Error(ErrorCode::kInvalidModel, "function given for an unknown node");
  }
  return model;
}

void Model::bindRule(int v, NodeFunction function, std::vector<Sign> signs) {
  Rule rule;
  if (const auto* fn = std::get_if<MonotoneFunction>(&function)) {
    if (signs.size() != fn->regulators().size()) {
      throw Error(ErrorCode::kInvalidModel, "sign list does not match regulators");
    }
    for (const auto& reg : fn->regulators()) {
      auto idx = find(reg);
      if (!idx) {
        throw Error(ErrorCode::kInvalidModel, "unknown regulator '" + reg + "'");
      }
      rule.regulators.push_back(*idx);
    }
  } else if (!signs.empty()) {
    throw Error(ErrorCode::kInvalidModel, "constant node '" + nodes_[v] + "' cannot have in-edges");
  }
  rule.function = std::move(function);
  rule.signs = std::move(signs);
  rules_[v] = std::move(rule);
}

std::optional<int> Model::find(std::string_view name) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

int Model::index(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw Error(ErrorCode::kUnknownNode, "unknown node '" + std::string(name) + "'");
  return *idx;
}

std::optional<Sign> Model::edgeSign(std::string_view source, std::string_view target) const {
  auto t = find(target);
  auto s = find(source);
  if (!t || !s) return std::nullopt;
  const auto& regs = rules_[*t].regulators;
  for (std::size_t i = 0; i < regs.size(); ++i) {
    if (regs[i] == *s) return rules_[*t].signs[i];
  }
  return std::nullopt;
}

std::vector<Edge> Model::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < size(); ++v) {
    for (std::size_t i = 0; i < rules_[v].regulators.size(); ++i) {
      out.push_back({nodes_[rules_[v].regulators[i]], nodes_[v], rules_[v].signs[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Model Model::withRule(int v, NodeFunction function, std::vector<Sign> signs) const {
  Model copy = *this;
  copy.bindRule(v, std::move(function), std::move(signs));
  return copy;
}

Model Model::withFormat(ModelFormat format) const {
  Model copy = *this;
  copy.format_ = format;
  return copy;
}

std::string modelSignature(const Model& model) {
  std::string out;
  for (int v = 0; v < model.size(); ++v) {
    out += model.nodes()[v];
    out += '=';
    const auto& fn = model.function(v);
    if (const auto* c = std::get_if<Constant>(&fn)) {
      out += c->value ? "1" : "0";
    } else {
      const auto& mf = std::get<MonotoneFunction>(fn);
      const auto& signs = model.signs(v);
      std::vector<std::string> clauses;
      for (Clause c : mf.clauses()) {
        std::vector<std::string> lits;
        for (int i = 0; i < mf.arity(); ++i) {
          if (c & (Clause{1} << i)) {
            lits.push_back((signs[i] == Sign::kPositive ? "+" : "-") + mf.regulators()[i]);
          }
        }
        std::sort(lits.begin(), lits.end());
        std::string clause;
        for (const auto& l : lits) {
          if (!clause.empty()) clause += '&';
          clause += l;
        }
        clauses.push_back(std::move(clause));
      }
      std::sort(clauses.begin(), clauses.end());
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) out += '|';
        out += clauses[i];
      }
    }
    out += ';';
  }
  return out;
}

}  // namespace boolrev
