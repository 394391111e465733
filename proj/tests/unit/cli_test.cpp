// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "boolrev/error.hpp"
#include "cli.hpp"
#include "cli_cases.hpp"

namespace boolrev::cli {
namespace {

namespace fs = std::filesystem;

ErrorCode parseError(const std::vector<std::string>& argv) {
  try {
    parseArgs(argv);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed";
  return ErrorCode::kSyntax;
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& argv) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main(argv, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseArgs, Defaults) {
  const auto args = parseArgs({"-m", "x.bnet", "-obs", "a.csv", "steady"});
  EXPECT_EQ(args.model, "x.bnet");
  EXPECT_EQ(args.task, Task::kRepair);
  EXPECT_EQ(args.solutions, 3);
  EXPECT_EQ(args.format, RenderFormat::kHuman);
  EXPECT_FALSE(args.exhaustive_search);
  EXPECT_FALSE(args.debug);
  ASSERT_EQ(args.observations.size(), 1u);
  EXPECT_EQ(args.observations[0].binding.kind, ObservationKind::kSteady);
}

TEST(ParseArgs, ObservationPairs) {
  const auto one = parseArgs({"-m", "x.lp", "-obs", "a.lp", "async", "b.lp", "syncupdater"});
  const auto two = parseArgs({"-m", "x.lp", "-obs", "a.lp", "async", "--observations", "b.lp", "syncupdater"});
  for (const auto& args : {one, two}) {
    ASSERT_EQ(args.observations.size(), 2u);
    EXPECT_EQ(args.observations[0].path, "a.lp");
    EXPECT_EQ(args.observations[0].binding.scheme, UpdateScheme::kAsynchronous);
    EXPECT_EQ(args.observations[1].path, "b.lp");
    EXPECT_EQ(args.observations[1].binding.scheme, UpdateScheme::kSynchronous);
  }
}

TEST(ParseArgs, FixedEntities) {
  const auto args = parseArgs({"-m", "x.bnet", "-t", "c", "--fixed-nodes", "A", "B", "--fixed-edges",
                               "A,B", "C;D", "E:F"});
  EXPECT_EQ(args.fixed_nodes, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(args.fixed_edges,
            (std::vector<std::pair<std::string, std::string>>{{"A", "B"}, {"C", "D"}, {"E", "F"}}));
}

TEST(ParseArgs, UsageErrors) {
  EXPECT_EQ(parseError({"-m", "x.bnet", "-t", "x"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-t", "c"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-m", "x.bnet", "-obs", "a.csv"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-m", "x.bnet", "-obs", "a.csv", "sometimes"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-m", "x.bnet", "-t", "r"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-m", "x.bnet", "-t", "c", "-s", "5"}), ErrorCode::kUsage);
  EXPECT_EQ(parseError({"-m", "x.bnet", "-t", "c", "--fixed-edges", "AB"}), ErrorCode::kUsage);
  try {
    parseArgs({"-t", "q"});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("--exhaustive-search"), std::string::npos);
  }
}

TEST(ParseArgs, HelpListsOptions) {
  const auto help = helpText();
  for (const char* option : {"--model", "--observations", "--task", "--solutions", "--format",
                             "--fixed-nodes", "--fixed-edges", "--debug"}) {
    EXPECT_NE(help.find(option), std::string::npos) << option;
  }
  EXPECT_TRUE(parseArgs({"-h"}).help);
}

class CliCases : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { cli_cases::stageFixtures(dir()); }
  static std::string dir() { return (fs::temp_directory_path() / "boolrev_cli_test").string(); }
};

TEST_F(CliCases, ExitCodesAndRepeatability) {
  for (const auto& c : cli_cases::cases(dir())) {
    const Invocation first = run(c.args);
    EXPECT_EQ(first.code, c.expected_exit) << c.name << "\n" << first.err;
    const Invocation second = run(c.args);
    EXPECT_EQ(first.out, second.out) << c.name;
  }
}

TEST_F(CliCases, HscWorkflow) {
  const auto at = [](const char* f) { return (fs::path(dir()) / f).string(); };
  const Invocation steady = run({"-m", at("hsc.bnet"), "-obs", at("hsc_steady.csv"), "steady", "-t", "c"});
  EXPECT_EQ(steady.code, 0);
  EXPECT_NE(steady.out.find("This model is consistent!"), std::string::npos);
  const Invocation check = run({"-m", at("hsc.bnet"), "-obs", at("hsc_steady.csv"), "steady", at("hsc_ihsc_plymph.csv"),
                         "async", "-t", "c"});
  EXPECT_EQ(check.code, 0);
  EXPECT_NE(check.out.find("Spi1"), std::string::npos);
  const Invocation models = run({"-m", at("hsc.bnet"), "-obs", at("hsc_steady.csv"), "steady", at("hsc_ihsc_plymph.csv"),
                          "async", "-t", "m", "-s", "1"});
  EXPECT_EQ(models.code, 0);
  EXPECT_NE(models.out.find("Repaired model: " + at("hsc_1.bnet")), std::string::npos);
  const Invocation recheck = run({"-m", at("hsc_1.bnet"), "-obs", at("hsc_steady.csv"), "steady",
                           at("hsc_ihsc_plymph.csv"), "async", "-t", "c"});
  EXPECT_NE(recheck.out.find("This model is consistent!"), std::string::npos);
}

TEST_F(CliCases, WriteFailureExitCode) {
  const auto at = [](const char* f) { return (fs::path(dir()) / f).string(); };
  fs::create_directories(at("cellcycle_1.bnet"));
  const Invocation r = run({"-m", at("cellcycle.bnet"), "-obs", at("cellcycle_steady.csv"), "steady", "-t", "m"});
  EXPECT_EQ(r.code, kExitIo) << r.err;
  fs::remove_all(at("cellcycle_1.bnet"));
}

TEST_F(CliCases, DebugTimingsGoToStandardError) {
  const auto at = [](const char* f) { return (fs::path(dir()) / f).string(); };
  const Invocation plain = run({"-m", at("toy.bnet"), "-obs", at("toy_sync.csv"), "sync"});
  const Invocation debug = run({"-m", at("toy.bnet"), "-obs", at("toy_sync.csv"), "sync", "-d"});
  EXPECT_EQ(plain.out, debug.out);
  EXPECT_FALSE(debug.err.empty());
}

}  // namespace
}  // namespace boolrev::cli
