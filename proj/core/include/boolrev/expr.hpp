// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace boolrev {

/// Abstract syntax tree of a Boolean expression.
class BoolExpr {
 public:
  enum class Kind { kConstant, kVariable, kNot, kAnd, kOr };

  static BoolExpr constant(bool value);
  static BoolExpr variable(std::string name);
  static BoolExpr negation(BoolExpr operand);
  static BoolExpr conjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr disjunction(BoolExpr lhs, BoolExpr rhs);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  const std::string& name() const { return name_; }
  const std::vector<BoolExpr>& operands() const { return operands_; }

  /// Variable names in order of first appearance.
  std::vector<std::string> variables() const;

 private:
  BoolExpr(Kind kind) : kind_(kind) {}

  Kind kind_;
  bool value_ = false;
  std::string name_;
  std::vector<BoolExpr> operands_;
};

/// Parses `text` with the grammar
///   expr := term ('|' | '||') expr | term
///   term := factor ('&' | '&&') term | factor
///   factor := '!' factor | '(' expr ')' | var | '0' | '1'
/// Throws Error(kSyntax) with the offending position, or
/// Error(kUnknownVariable) when `allowed` is non-null and lacks a variable.
BoolExpr parseExpr(std::string_view text, const std::vector<std::string>* allowed = nullptr);

/// Largest variable count accepted by truthTable.
inline constexpr int kMaxTruthTableVars = 24;

/// Output column of a function; row i assigns order[j] the value of bit j of i.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(std::vector<std::string> order);

  const std::vector<std::string>& order() const { return order_; }
  int arity() const { return static_cast<int>(order_.size()); }
  std::uint64_t rows() const { return std::uint64_t{1} << order_.size(); }

  bool get(std::uint64_t row) const { return (words_[row >> 6] >> (row & 63)) & 1U; }
  void set(std::uint64_t row, bool value);

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool isConstant(bool value) const;
  /// Row outputs as '0'/'1' characters, row 0 first.
  std::string bitString() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<std::string> order_;
  std::vector<std::uint64_t> words_;
};

/// Throws Error(kTooManyVariables) beyond kMaxTruthTableVars and
/// Error(kUnknownVariable) if a variable is not in `order`.
TruthTable truthTable(const BoolExpr& expr, const std::vector<std::string>& order);

}  // namespace boolrev
