// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include <cstdlib>
#include <functional>

#include "boolrev/clause.hpp"
#include "boolrev/error.hpp"
#include "boolrev/lattice.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/observations_io.hpp"
#include "boolrev/revision.hpp"
#include "oracles.hpp"

namespace boolrev {
namespace {

Model m1() { return parseBnet("A, B\nB, A & B\n"); }

std::vector<ObservationProfile> steady10() {
  ObservationProfile p;
  p.id = "p1";
  p.rows[0].cells = {{"A", true}, {"B", false}};
  return {p};
}

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kUsage;
}

TEST(SearchRepairs, M1SingleFlip) {
  const auto profiles = steady10();
  const auto report = checkConsistency(m1(), profiles);
  const auto solutions = searchRepairs(m1(), profiles, report);
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0].total_operations, 1);
  ASSERT_EQ(solutions[0].nodes.size(), 1u);
  EXPECT_EQ(solutions[0].nodes[0].first, "A");
  ASSERT_EQ(solutions[0].nodes[0].second.size(), 1u);
  EXPECT_EQ(solutions[0].nodes[0].second[0],
            (NodeRepair{"A", {FlipEdgeSign{"B", "A", Sign::kNegative}}}));

  // Oracle over every single sign flip and every function change of A.
  const Model m = m1();
  const int a = m.index("A");
  int consistent_single_ops = 0;
  for (std::size_t i = 0; i < m.regulators(a).size(); ++i) {
    const auto& src = m.nodes()[m.regulators(a)[i]];
    const NodeRepair r{"A", {FlipEdgeSign{src, "A", negate(m.signs(a)[i])}}};
    consistent_single_ops += oracle::profileSatisfiable(applyRepair(m, {r}), profiles[0], 0);
  }
  const auto& fn = std::get<MonotoneFunction>(m.function(a));
  for (const auto& clauses : oracle::nondegenerateByTruthTable(fn.arity())) {
    if (clauses == fn.clauses()) continue;
    const NodeRepair r{"A", {ChangeFunction{"A", fn.withClauses(clauses)}}};
    consistent_single_ops += oracle::profileSatisfiable(applyRepair(m, {r}), profiles[0], 0);
  }
  EXPECT_EQ(consistent_single_ops, 1);
}

TEST(SearchRepairs, FixedEntities) {
  const auto profiles = steady10();
  const auto report = checkConsistency(m1(), profiles);
  RevisionOptions fixed_node;
  fixed_node.fixed_nodes = {"A"};
  EXPECT_EQ(codeOf([&] { searchRepairs(m1(), profiles, report, fixed_node); }), ErrorCode::kNoRepairFound);

  RevisionOptions unknown;
  unknown.fixed_nodes = {"Q"};
  EXPECT_EQ(codeOf([&] { searchRepairs(m1(), profiles, report, unknown); }), ErrorCode::kUnknownNode);

  RevisionOptions fixed_edge;
  fixed_edge.fixed_edges = {{"B", "A"}};
  for (const auto& s : searchRepairs(m1(), profiles, report, fixed_edge)) {
    for (const auto& [node, repairs] : s.nodes) {
      for (const auto& r : repairs) {
        for (const auto& op : r.ops) {
          if (const auto* f = std::get_if<FlipEdgeSign>(&op)) EXPECT_FALSE(f->source == "B" && f->target == "A");
          if (const auto* rm = std::get_if<RemoveEdge>(&op)) EXPECT_FALSE(rm->source == "B" && rm->target == "A");
        }
      }
    }
  }
}

TEST(SearchRepairs, OptionGuards) {
  const auto profiles = steady10();
  const auto report = checkConsistency(m1(), profiles);
  RevisionOptions wide;
  wide.max_added_regulators = 2;
  EXPECT_EQ(codeOf([&] { searchRepairs(m1(), profiles, report, wide); }), ErrorCode::kGuardOverflow);
  RevisionOptions level;
  level.solutions_level = 5;
  EXPECT_EQ(codeOf([&] { searchRepairs(m1(), profiles, report, level); }), ErrorCode::kUsage);
}

TEST(SearchRepairs, ChangeFunctionResultsAreNondegenerateAndNearest) {
  const std::string dir = BOOLREV_FIXTURES;
  const Model m = loadModel(dir + "/toy.bnet");
  const auto profiles = loadObservations(dir + "/toy_sync.csv", parseBindingToken("sync"), &m.nodes());
  RevisionOptions options;
  options.solutions_level = 4;
  const auto solutions = searchRepairs(m, profiles, checkConsistency(m, profiles), options);
  for (const auto& s : solutions) {
    for (const auto& [node, repairs] : s.nodes) {
      for (const auto& r : repairs) {
        for (const auto& op : r.ops) {
          if (const auto* c = std::get_if<ChangeFunction>(&op)) {
            const auto& fn = std::get<MonotoneFunction>(c->function);
            EXPECT_TRUE(isNondegenerate(fn.clauses(), fn.arity()));
            EXPECT_TRUE(isAntichain(fn.clauses()));
          }
        }
      }
    }
  }
}

// Six distinct repaired models for the reconstructed toy at level 4, with a
// 3-operation optimum and 4-operation sub-optimal solutions.
TEST(GenerateRepairedModels, ToyLevelFour) {
  const std::string dir = BOOLREV_FIXTURES;
  const auto tmp = std::filesystem::temp_directory_path() / "boolrev_repair_test";
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  std::filesystem::copy_file(dir + "/toy.bnet", tmp / "model.bnet");
  const Model m = loadModel((tmp / "model.bnet").string());
  const auto profiles = loadObservations(dir + "/toy_sync.csv", parseBindingToken("syncupdater"), &m.nodes());
  RevisionOptions options;
  options.solutions_level = 4;
  const auto solutions = searchRepairs(m, profiles, checkConsistency(m, profiles), options);
  std::set<int> totals;
  for (const auto& s : solutions) {
    totals.insert(s.total_operations);
    EXPECT_EQ(s.sub_optimal, s.total_operations == 4);
  }
  EXPECT_EQ(totals, (std::set<int>{3, 4}));
  const auto paths = generateRepairedModels(m, profiles, solutions, (tmp / "model.bnet").string(), options);
  ASSERT_EQ(paths.size(), 6u);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(paths[k - 1], (tmp / ("model_" + std::to_string(k) + ".bnet")).string());
    EXPECT_TRUE(checkConsistency(loadModel(paths[k - 1]), profiles).consistent);
  }
}

TEST(GenerateRepairedModels, ZeroSolutionsWritesNothing) {
  const auto tmp = std::filesystem::temp_directory_path() / "boolrev_repair_none";
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  const auto path = (tmp / "m.bnet").string();
  EXPECT_EQ(codeOf([&] { generateRepairedModels(m1(), steady10(), {}, path); }), ErrorCode::kNoRepairFound);
  EXPECT_TRUE(std::filesystem::is_empty(tmp));
}

std::set<std::string> modelsOf(const Model& m, const std::vector<ObservationProfile>& ps,
                               const std::vector<Solution>& solutions) {
  std::set<std::string> out;
  for (const auto& r : repairedModels(m, ps, solutions)) out.insert(modelSignature(r));
  return out;
}

// Level relations, soundness and fixed-node respect on random instances.
TEST(SearchRepairs, LevelsAreNestedAndSound) {
  Rng rng(99);
  int checked = 0;
  for (int iter = 0; iter < 80 && checked < 25; ++iter) {
    const Model m = oracle::randomSmallModel(3 + static_cast<int>(rng.below(3)), rng);
    std::vector<ObservationProfile> ps;
    for (int i = 0; i < 2; ++i) ps.push_back(oracle::randomProfile(m, "p" + std::to_string(i), 3, rng));
    ConsistencyReport report;
    try {
      report = checkConsistency(m, ps);
    } catch (const Error&) {
      continue;
    }
    if (report.consistent) continue;
    std::vector<std::vector<Solution>> by_level(5);
    try {
      for (int level = 1; level <= 4; ++level) {
        RevisionOptions o;
        o.solutions_level = level;
        by_level[level] = searchRepairs(m, ps, report, o);
      }
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNoRepairFound);
      continue;
    }
    ++checked;
    const auto four = modelsOf(m, ps, by_level[4]);
    for (int level = 1; level <= 3; ++level) {
      for (const auto& sig : modelsOf(m, ps, by_level[level])) EXPECT_TRUE(four.count(sig)) << level;
    }
    for (const auto& s : by_level[3]) EXPECT_FALSE(s.sub_optimal);
    int best = by_level[4].front().total_operations;
    for (const auto& s : by_level[4]) best = std::min(best, s.total_operations);
    ASSERT_EQ(by_level[2].size(), 1u);
    EXPECT_EQ(by_level[2][0].total_operations, best);
    for (const auto& s : by_level[4]) {
      for (const auto& [node, repairs] : s.nodes) {
        for (const auto& r : repairs) EXPECT_EQ(r.cost(), static_cast<int>(r.ops.size()));
      }
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(SearchRepairs, SameResultAcrossThreadCounts) {
  const std::string dir = BOOLREV_FIXTURES;
  const Model m = loadModel(dir + "/toy.bnet");
  const auto profiles = loadObservations(dir + "/toy_sync.csv", parseBindingToken("sync"), &m.nodes());
  RevisionOptions options;
  options.solutions_level = 4;
  ::setenv("BOOLREV_THREADS", "1", 1);
  const auto one = searchRepairs(m, profiles, checkConsistency(m, profiles), options);
  ::setenv("BOOLREV_THREADS", "4", 1);
  const auto four = searchRepairs(m, profiles, checkConsistency(m, profiles), options);
  ::unsetenv("BOOLREV_THREADS");
  EXPECT_EQ(one, four);
}

}  // namespace
}  // namespace boolrev
