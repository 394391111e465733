// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "boolrev/expr.hpp"
#include "boolrev/model.hpp"

namespace boolrev {

struct SignedFunction {
  /// Parallel to function.regulators().
  std::vector<Sign> signs;
  MonotoneFunction function;
};

/// Converts an expression into a sign vector plus a positive CDNF over
/// `regulators` (in that order). Throws Error(kDualRoleRegulator),
/// Error(kDegenerateFunction) (a regulator is inessential, including the case
/// of an expression over variables that is constant), or
/// Error(kConstantFunction) when `regulators` is empty.
SignedFunction toSignedMonotone(const BoolExpr& expr, const std::vector<std::string>& regulators);

enum class ExprSyntax {
  kReport,  // (A && !B) || (C)
  kBnet,    // (A & !B) | (C)
};

/// Clauses in canonical order, literals in regulator order.
std::string renderFunction(const NodeFunction& function, const std::vector<Sign>& signs,
                           ExprSyntax syntax);

/// Renders the current rule of node v.
std::string renderNodeFunction(const Model& model, int v, ExprSyntax syntax);

}  // namespace boolrev
