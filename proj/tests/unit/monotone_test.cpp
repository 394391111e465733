// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "boolrev/error.hpp"
#include "boolrev/expr.hpp"
#include "boolrev/monotone.hpp"
#include "boolrev/rng.hpp"

namespace boolrev {
namespace {

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kUsage;
}

TEST(ToSignedMonotone, SignsFromPolarity) {
  const auto r = toSignedMonotone(parseExpr("!Gata1 && Gata2"), {"Gata1", "Gata2"});
  EXPECT_EQ(r.signs, (std::vector<Sign>{Sign::kNegative, Sign::kPositive}));
  EXPECT_EQ(r.function.clauses(), (std::vector<Clause>{0b11}));
}

TEST(ToSignedMonotone, Errors) {
  EXPECT_EQ(codeOf([] { toSignedMonotone(parseExpr("(A&B) | (!A&C)"), {"A", "B", "C"}); }),
            ErrorCode::kDualRoleRegulator);
  EXPECT_EQ(codeOf([] { toSignedMonotone(parseExpr("(A & B) | A"), {"A", "B"}); }),
            ErrorCode::kDegenerateFunction);
  EXPECT_EQ(codeOf([] { toSignedMonotone(parseExpr("A | !A"), {"A"}); }),
            ErrorCode::kDegenerateFunction);
  EXPECT_EQ(codeOf([] { toSignedMonotone(parseExpr("1"), {}); }), ErrorCode::kConstantFunction);
}

TEST(ToSignedMonotone, WideUnateFunctions) {
  // 14 regulators, beyond the prime-implicant path.
  std::string text;
  std::vector<std::string> regs;
  for (int i = 0; i < 14; i += 2) {
    if (!text.empty()) text += " | ";
    text += "(v" + std::to_string(i) + " & !v" + std::to_string(i + 1) + ")";
    regs.push_back("v" + std::to_string(i));
    regs.push_back("v" + std::to_string(i + 1));
  }
  const auto r = toSignedMonotone(parseExpr(text), regs);
  ASSERT_EQ(r.function.clauses().size(), 7u);
  for (int i = 0; i < 14; ++i) {
    EXPECT_EQ(r.signs[i], i % 2 ? Sign::kNegative : Sign::kPositive);
  }
}

TEST(RenderFunction, ReportAndBnetSyntax) {
  const auto r = toSignedMonotone(parseExpr("(!Gata1 & Gata2) | (!Gata1 & Spi1) | (Cebpa & !Gata1)"),
                                  {"Gata1", "Gata2", "Spi1", "Cebpa"});
  EXPECT_EQ(renderFunction(r.function, r.signs, ExprSyntax::kReport),
            "(!Gata1 && Gata2) || (!Gata1 && Spi1) || (!Gata1 && Cebpa)");
  EXPECT_EQ(renderFunction(r.function, r.signs, ExprSyntax::kBnet),
            "(!Gata1 & Gata2) | (!Gata1 & Spi1) | (!Gata1 & Cebpa)");
  EXPECT_EQ(renderFunction(Constant{true}, {}, ExprSyntax::kBnet), "1");
}

// Rendering then re-parsing reproduces the truth table.
TEST(ToSignedMonotone, RenderRoundTripKeepsTruthTable) {
  Rng rng(11);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<std::string> regs;
    std::vector<bool> negative;
    for (int i = 0; i < n; ++i) {
      regs.push_back("r" + std::to_string(i));
      negative.push_back(rng.coin());
    }
    std::string text;
    const int terms = 1 + static_cast<int>(rng.below(4));
    for (int t = 0; t < terms; ++t) {
      if (t) text += " | ";
      text += "(";
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (!rng.coin()) continue;
        text += std::string(first ? "" : " & ") + (negative[i] ? "!" : "") + regs[i];
        first = false;
      }
      if (first) text += (negative[0] ? "!" : "") + regs[0];
      text += ")";
    }
    const auto expr = parseExpr(text);
    SignedFunction r;
    try {
      r = toSignedMonotone(expr, regs);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateFunction);
      continue;
    }
    const auto rendered = renderFunction(r.function, r.signs, ExprSyntax::kReport);
    EXPECT_EQ(truthTable(parseExpr(rendered), regs), truthTable(expr, regs)) << text;
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace boolrev
