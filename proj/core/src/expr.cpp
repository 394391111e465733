// SPDX-License-Identifier: Apache-2.0
#include "boolrev/expr.hpp"

#include <algorithm>
#include <cctype>

#include "boolrev/error.hpp"

namespace boolrev {

BoolExpr BoolExpr::constant(bool value) {
  BoolExpr e(Kind::kConstant);
  e.value_ = value;
  return e;
}

BoolExpr BoolExpr::variable(std::string name) {
  BoolExpr e(Kind::kVariable);
  e.name_ = std::move(name);
  return e;
}

BoolExpr BoolExpr::negation(BoolExpr operand) {
  BoolExpr e(Kind::kNot);
  e.operands_.push_back(std::move(operand));
  return e;
}

BoolExpr BoolExpr::conjunction(BoolExpr lhs, BoolExpr rhs) {
  BoolExpr e(Kind::kAnd);
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

BoolExpr BoolExpr::disjunction(BoolExpr lhs, BoolExpr rhs) {
  BoolExpr e(Kind::kOr);
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

std::vector<std::string> BoolExpr::variables() const {
  std::vector<std::string> out;
  std::vector<const BoolExpr*> stack{this};
  while (!stack.empty()) {
    const BoolExpr* e = stack.back();
    stack.pop_back();
    if (e->kind_ == Kind::kVariable) {
      if (std::find(out.begin(), out.end(), e->name_) == out.end()) out.push_back(e->name_);
    }
    for (auto it = e->operands_.rbegin(); it != e->operands_.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* allowed)
      : text_(text), allowed_(allowed) {}

  BoolExpr parse() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty expression");
    BoolExpr e = expr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntax, what + " at position " + std::to_string(pos_ + 1));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Accepts a single or doubled operator character.
  bool accept(char op) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == op) {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == op) ++pos_;
      return true;
    }
    return false;
  }

  BoolExpr expr() {
    BoolExpr lhs = term();
    if (accept('|')) return BoolExpr::disjunction(std::move(lhs), expr());
    return lhs;
  }

  BoolExpr term() {
    BoolExpr lhs = factor();
    if (accept('&')) return BoolExpr::conjunction(std::move(lhs), term());
    return lhs;
  }

  BoolExpr factor() {
    skipSpace();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return BoolExpr::negation(factor());
    }
    if (c == '(') {
      ++pos_;
      BoolExpr inner = expr();
      skipSpace();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    auto ident = [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    };
    if (!ident(c)) fail("unexpected '" + std::string(1, c) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident(text_[pos_])) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "0" || word == "1") return BoolExpr::constant(word == "1");
    if (std::isdigit(static_cast<unsigned char>(word.front()))) {
      pos_ = start;
      fail("invalid identifier '" + word + "'");
    }
    if (allowed_ && std::find(allowed_->begin(), allowed_->end(), word) == allowed_->end()) {
      throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + word + "' at position " +
                                                   std::to_string(start + 1));
    }
    return BoolExpr::variable(std::move(word));
  }

  std::string_view text_;
  const std::vector<std::string>* allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parseExpr(std::string_view text, const std::vector<std::string>* allowed) {
  return Parser(text, allowed).parse();
}

TruthTable::TruthTable(std::vector<std::string> order) : order_(std::move(order)) {
  if (arity() > kMaxTruthTableVars) {
    throw Error(ErrorCode::kTooManyVariables,
                "truth table over " + std::to_string(arity()) + " variables exceeds the limit of " +
                    std::to_string(kMaxTruthTableVars));
  }
  words_.assign((rows() + 63) / 64, 0);
}

void TruthTable::set(std::uint64_t row, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (row & 63);
  if (value) {
    words_[row >> 6] |= mask;
  } else {
    words_[row >> 6] &= ~mask;
  }
}

bool TruthTable::isConstant(bool value) const {
  for (std::uint64_t r = 0; r < rows(); ++r) {
    if (get(r) != value) return false;
  }
  return true;
}

std::string TruthTable::bitString() const {
  std::string out;
  out.reserve(rows());
  for (std::uint64_t r = 0; r < rows(); ++r) out += get(r) ? '1' : '0';
  return out;
}

namespace {

using Column = std::vector<std::uint64_t>;

// Column of variable j over `rows` rows, bit-parallel.
Column variableColumn(int j, std::uint64_t rows) {
  Column col((rows + 63) / 64, 0);
  if (j < 6) {
    static constexpr std::uint64_t kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    for (auto& w : col) w = kPatterns[j];
  } else {
    for (std::size_t w = 0; w < col.size(); ++w) {
      if ((w >> (j - 6)) & 1U) col[w] = ~std::uint64_t{0};
    }
  }
  return col;
}

Column evaluate(const BoolExpr& e, const std::vector<std::string>& order, std::uint64_t rows) {
  const std::size_t words = (rows + 63) / 64;
  switch (e.kind()) {
    case BoolExpr::Kind::kConstant:
      return Column(words, e.value() ? ~std::uint64_t{0} : 0);
    case BoolExpr::Kind::kVariable: {
      auto it = std::find(order.begin(), order.end(), e.name());
      if (it == order.end()) {
        throw Error(ErrorCode::kUnknownVariable, "variable '" + e.name() + "' not in the order");
      }
      return variableColumn(static_cast<int>(it - order.begin()), rows);
    }
    case BoolExpr::Kind::kNot: {
      Column c = evaluate(e.operands()[0], order, rows);
      for (auto& w : c) w = ~w;
      return c;
    }
    case BoolExpr::Kind::kAnd:
    case BoolExpr::Kind::kOr: {
      Column a = evaluate(e.operands()[0], order, rows);
      const Column b = evaluate(e.operands()[1], order, rows);
      const bool conj = e.kind() == BoolExpr::Kind::kAnd;
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = conj ? (a[i] & b[i]) : (a[i] | b[i]);
      return a;
    }
  }
  return Column(words, 0);
}

}  // namespace

TruthTable truthTable(const BoolExpr& expr, const std::vector<std::string>& order) {
  TruthTable table(order);
  Column col = evaluate(expr, order, table.rows());
  if (table.rows() < 64) col[0] &= (std::uint64_t{1} << table.rows()) - 1;
  table.words() = std::move(col);
  return table;
}

}  // namespace boolrev
