// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "boolrev/error.hpp"
#include "boolrev/observations_io.hpp"

namespace boolrev {
namespace {

const ObservationBinding kSteady{ObservationKind::kSteady, std::nullopt};
const ObservationBinding kSync{ObservationKind::kTimeSeries, UpdateScheme::kSynchronous};

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kUsage;
}

TEST(BindingToken, AllTokensAndAliases) {
  EXPECT_EQ(parseBindingToken("steady"), kSteady);
  EXPECT_EQ(parseBindingToken("notsteady").kind, ObservationKind::kNotSteady);
  EXPECT_EQ(parseBindingToken("sync"), kSync);
  EXPECT_EQ(parseBindingToken("syncupdater"), kSync);
  EXPECT_EQ(parseBindingToken("async").scheme, UpdateScheme::kAsynchronous);
  EXPECT_EQ(parseBindingToken("complete").scheme, UpdateScheme::kComplete);
  EXPECT_EQ(codeOf([] { parseBindingToken("fast"); }), ErrorCode::kUsage);
}

TEST(MissingTokens, Exactly) {
  for (const char* t : {"", "*", "N/A", "NaN", "-"}) EXPECT_TRUE(isMissingToken(t)) << t;
  for (const char* t : {"0", "1", "x", "nan?"}) EXPECT_FALSE(isMissingToken(t)) << t;
}

TEST(ParseCsv, SteadyLayout) {
  const auto ps = parseObservationsCsv(",node1,node2,node3\np1,0,1,0\n", kSteady);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].id, "p1");
  EXPECT_EQ(ps[0].kind, ObservationKind::kSteady);
  EXPECT_EQ(ps[0].rows.at(0).cells, (std::map<std::string, bool>{{"node1", false}, {"node2", true}, {"node3", false}}));
}

TEST(ParseCsv, TimeSeriesWithMissing) {
  const auto ps = parseObservationsCsv(",,n1,n2,n3\np1,0,0,1,1\np1,1,1, ,0\np1,2,*,0,0\n", kSync);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].scheme, UpdateScheme::kSynchronous);
  EXPECT_EQ(ps[0].rows.size(), 3u);
  EXPECT_FALSE(ps[0].rows.at(1).value("n2").has_value());
  EXPECT_FALSE(ps[0].rows.at(2).value("n1").has_value());
}

TEST(ParseCsv, GapsBecomeMissingRows) {
  const auto ps = parseObservationsCsv(",,a,b\nq,0,1,0\nq,5,0,1\n",
                                       {ObservationKind::kTimeSeries, UpdateScheme::kAsynchronous});
  ASSERT_EQ(ps[0].rows.size(), 6u);
  for (int t = 1; t <= 4; ++t) EXPECT_TRUE(ps[0].rows.at(t).cells.empty());
}

TEST(ParseCsv, Errors) {
  const std::vector<std::string> nodes{"a", "b"};
  EXPECT_EQ(codeOf([&] { parseObservationsCsv(",a,z\np,0,1\n", kSteady, &nodes); }),
            ErrorCode::kUnknownNodeColumn);
  EXPECT_EQ(codeOf([] { parseObservationsCsv(",a,b\np,0,2\n", kSteady); }), ErrorCode::kNonBinaryCell);
  EXPECT_EQ(codeOf([] { parseObservationsCsv(",,a,b\np,0,0,1\np,0,1,1\n", kSync); }),
            ErrorCode::kDuplicateProfileTimePair);
  EXPECT_EQ(codeOf([] { parseObservationsCsv(",a,b\np,0,1\np,1,1\n", kSteady); }),
            ErrorCode::kDuplicateProfile);
  EXPECT_EQ(codeOf([] { parseObservationsCsv(",,a\np,0,1\n", kSteady); }), ErrorCode::kSyntax);
  EXPECT_EQ(codeOf([] { parseObservationsCsv(",a,b\np,0,1,1\n", kSteady); }), ErrorCode::kSyntax);
  // Short rows leave the trailing cells missing.
  EXPECT_FALSE(parseObservationsCsv(",a,b\np,0\n", kSteady)[0].rows.at(0).value("b").has_value());
}

TEST(ParseLp, Profiles) {
  const auto one = parseObservationsLp("exp(p1). obs_vlabel(p1,a,1,0).", kSteady);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].rows.at(0).cells, (std::map<std::string, bool>{{"a", true}}));
  const auto two = parseObservationsLp("exp(p1). exp(p2). obs_vlabel(p2,a,0).", kSteady);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(codeOf([] { parseObservationsLp("exp(p1). obs_vlabel(p1,a,2,0).", kSteady); }),
            ErrorCode::kValueOutOfRange);
  const std::vector<std::string> nodes{"a"};
  EXPECT_EQ(codeOf([&] { parseObservationsLp("exp(p1). obs_vlabel(p1,z,1).", kSteady, &nodes); }),
            ErrorCode::kUnknownNode);
}

TEST(Writers, CsvAndLpRoundTrip) {
  const auto ps = parseObservationsCsv(",,a,b,c\np,0,1,,0\np,1,0,1,1\nq,0,1,1,1\nq,2,0,0,0\n", kSync);
  const auto csv = formatObservationsCsv(ps, {"a", "b", "c"});
  EXPECT_EQ(parseObservationsCsv(csv, kSync), ps);
  EXPECT_EQ(parseObservationsLp(formatObservationsLp(ps), kSync), ps);
}

}  // namespace
}  // namespace boolrev
