// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolrev/clause.hpp"

namespace boolrev {

enum class Sign : std::uint8_t { kPositive, kNegative };

constexpr Sign negate(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}

/// "positive" / "negative".
std::string_view signName(Sign s);

/// Node identifiers follow `[A-Za-z_][A-Za-z0-9_]*`.
bool isValidNodeId(std::string_view name);

/// A monotone non-degenerate Boolean function in canonical DNF over an
/// ordered list of regulators. Literal polarity is not stored here; it comes
/// from the signs of the model's edges.
class MonotoneFunction {
 public:
  MonotoneFunction() = default;

  /// Throws Error(kInvalidModel) on an empty/non-antichain clause set or
  /// duplicate regulators, Error(kDegenerateFunction) if a regulator does not
  /// occur in any clause.
  MonotoneFunction(std::vector<std::string> regulators, std::vector<Clause> clauses);

  /// Clauses given by regulator names.
  static MonotoneFunction fromNames(std::vector<std::string> regulators,
                                    const std::vector<std::vector<std::string>>& clauses);

  const std::vector<std::string>& regulators() const { return regulators_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  int arity() const { return static_cast<int>(regulators_.size()); }

  /// -1 when `name` is not a regulator.
  int position(std::string_view name) const;

  /// Bit i of `signed_inputs` is the (sign-adjusted) value of regulator i.
  bool evaluate(std::uint32_t signed_inputs) const { return evaluateDnf(clauses_, signed_inputs); }

  /// Same function over the same regulators with different clauses.
  MonotoneFunction withClauses(std::vector<Clause> clauses) const {
    return MonotoneFunction(regulators_, std::move(clauses));
  }

  friend bool operator==(const MonotoneFunction&, const MonotoneFunction&) = default;

 private:
  std::vector<std::string> regulators_;
  std::vector<Clause> clauses_;
};

/// Regulator-free input node with a fixed value.
struct Constant {
  bool value = false;
  friend bool operator==(const Constant&, const Constant&) = default;
};

using NodeFunction = std::variant<Constant, MonotoneFunction>;

enum class ModelFormat { kBnet, kLp };

struct Edge {
  std::string source;
  std::string target;
  Sign sign = Sign::kPositive;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A Boolean logical model. Nodes are kept in lexicographic order and are
/// addressed by that index; each node owns its rule (function plus the sign of
/// each regulator, in the function's regulator order). Immutable once built.
class Model {
 public:
  /// Validates all structural invariants; throws Error(kInvalidModel).
  static Model create(std::vector<std::string> nodes, const std::vector<Edge>& edges,
                      const std::map<std::string, NodeFunction>& functions, ModelFormat format);

  const std::vector<std::string>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  ModelFormat format() const { return format_; }

  std::optional<int> find(std::string_view name) const;
  /// Throws Error(kUnknownNode).
  int index(std::string_view name) const;

  const NodeFunction& function(int v) const { return rules_[v].function; }
  bool isConstant(int v) const { return std::holds_alternative<Constant>(rules_[v].function); }
  /// Regulator node indices in function order (empty for constants).
  const std::vector<int>& regulators(int v) const { return rules_[v].regulators; }
  const std::vector<Sign>& signs(int v) const { return rules_[v].signs; }

  std::optional<Sign> edgeSign(std::string_view source, std::string_view target) const;
  /// All edges ordered by (source, target).
  std::vector<Edge> edges() const;

  /// Copy with node v's rule replaced; `signs` is parallel to the function's
  /// regulators. Throws Error(kInvalidModel).
  Model withRule(int v, NodeFunction function, std::vector<Sign> signs) const;
  Model withFormat(ModelFormat format) const;

 private:
  struct Rule {
    NodeFunction function;
    std::vector<Sign> signs;
    std::vector<int> regulators;
  };

  Model() = default;
  void bindRule(int v, NodeFunction function, std::vector<Sign> signs);

  std::vector<std::string> nodes_;
  std::vector<Rule> rules_;
  ModelFormat format_ = ModelFormat::kBnet;
};

/// Canonical text identifying the model up to regulator ordering: equal for
/// models with the same nodes, edges, signs and clause sets.
std::string modelSignature(const Model& model);

}  // namespace boolrev
