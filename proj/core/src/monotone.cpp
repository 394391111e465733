// SPDX-License-Identifier: Apache-2.0
#include "boolrev/monotone.hpp"

#include "boolrev/error.hpp"
#include "boolrev/quine_mccluskey.hpp"

namespace boolrev {
namespace {

// Up to this arity the full prime set is computed; above it the table is
// analysed for unateness directly, which yields the same clauses.
constexpr int kQuineMcCluskeyArity = 12;

SignedFunction fromPrimes(const std::vector<Implicant>& primes,
                          const std::vector<std::string>& regulators) {
  const int n = static_cast<int>(regulators.size());
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;
  for (const auto& p : primes) {
    positive |= p.care & p.value;
    negative |= p.care & ~p.value;
  }
  for (int j = 0; j < n; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << j;
    if ((positive & bit) && (negative & bit)) {
      throw Error(ErrorCode::kDualRoleRegulator,
                  "regulator '" + regulators[j] + "' occurs both positively and negatively");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!((positive | negative) >> j & 1U)) {
      throw Error(ErrorCode::kDegenerateFunction,
                  "regulator '" + regulators[j] + "' is not essential");
    }
  }
  SignedFunction out;
  for (int j = 0; j < n; ++j) {
    out.signs.push_back((negative >> j) & 1U ? Sign::kNegative : Sign::kPositive);
  }
  std::vector<Clause> clauses;
  for (const auto& p : primes) clauses.push_back(p.care);
  out.function = MonotoneFunction(regulators, std::move(clauses));
  return out;
}

// Primes of a unate table: minimal true points after normalizing polarity.
std::vector<Implicant> unatePrimes(const TruthTable& table,
                                   const std::vector<std::string>& regulators) {
  const int n = table.arity();
  std::uint32_t negative = 0;
  for (int j = 0; j < n; ++j) {
    bool rises = false;
    bool falls = false;
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t r = 0; r < table.rows() && !(rises && falls); ++r) {
      if (r & bit) continue;
      const bool lo = table.get(r);
      const bool hi = table.get(r | bit);
      rises |= !lo && hi;
      falls |= lo && !hi;
    }
    if (rises && falls) {
      throw Error(ErrorCode::kDualRoleRegulator,
                  "regulator '" + regulators[j] + "' occurs both positively and negatively");
    }
    if (!rises && !falls) {
      throw Error(ErrorCode::kDegenerateFunction,
                  "regulator '" + regulators[j] + "' is not essential");
    }
    if (falls) negative |= static_cast<std::uint32_t>(bit);
  }
  std::vector<Implicant> primes;
  for (std::uint64_t r = 0; r < table.rows(); ++r) {
    const auto point = static_cast<std::uint32_t>(r);
    if (!table.get(point ^ negative)) continue;
    bool minimal = true;
    for (std::uint32_t rest = point; rest && minimal; rest &= rest - 1) {
      const std::uint32_t lower = point & ~(rest & (~rest + 1));
      if (table.get(lower ^ negative)) minimal = false;
    }
    if (minimal) primes.push_back({point, (point & ~negative)});
  }
  return primes;
}

}  // namespace

SignedFunction toSignedMonotone(const BoolExpr& expr, const std::vector<std::string>& regulators) {
  if (regulators.size() > static_cast<std::size_t>(kMaxRegulators)) {
    throw Error(ErrorCode::kTooManyVariables, "too many regulators");
  }
  const TruthTable table = truthTable(expr, regulators);
  const bool is_false = table.isConstant(false);
  if (is_false || table.isConstant(true)) {
    if (regulators.empty()) {
      throw Error(ErrorCode::kConstantFunction,
                  std::string("function is the constant ") + (is_false ? "0" : "1"));
    }
    throw Error(ErrorCode::kDegenerateFunction, "function over regulators is constant");
  }
  if (table.arity() <= kQuineMcCluskeyArity) {
    return fromPrimes(quineMcCluskey(table), regulators);
  }
  return fromPrimes(unatePrimes(table, regulators), regulators);
}

std::string renderFunction(const NodeFunction& function, const std::vector<Sign>& signs,
                           ExprSyntax syntax) {
  if (const auto* c = std::get_if<Constant>(&function)) return c->value ? "1" : "0";
  const auto& fn = std::get<MonotoneFunction>(function);
  const char* conj = syntax == ExprSyntax::kReport ? " && " : " & ";
  const char* disj = syntax == ExprSyntax::kReport ? " || " : " | ";
  std::string out;
  for (std::size_t k = 0; k < fn.clauses().size(); ++k) {
    if (k) out += disj;
    out += '(';
    bool first = true;
    for (int i = 0; i < fn.arity(); ++i) {
      if (!((fn.clauses()[k] >> i) & 1U)) continue;
      if (!first) out += conj;
      first = false;
      if (signs[i] == Sign::kNegative) out += '!';
      out += fn.regulators()[i];
    }
    out += ')';
  }
  return out;
}

std::string renderNodeFunction(const Model& model, int v, ExprSyntax syntax) {
  return renderFunction(model.function(v), model.signs(v), syntax);
}

}  // namespace boolrev
