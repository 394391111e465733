// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "boolrev/observations_io.hpp"
#include "boolrev/render.hpp"

namespace boolrev::cli {

struct ObservationInput {
  std::string path;
  ObservationBinding binding;
  std::string token;
};

struct CliArgs {
  std::string model;
  std::vector<ObservationInput> observations;
  Task task = Task::kRepair;
  bool exhaustive_search = false;
  int solutions = 3;
  RenderFormat format = RenderFormat::kHuman;
  std::vector<std::string> fixed_nodes;
  std::vector<std::pair<std::string, std::string>> fixed_edges;
  bool debug = false;
  bool help = false;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitNoRepair = 4,
  kExitIo = 5,
};

std::string helpText();

/// `argv` excludes the program name. Throws Error(kUsage) whose message ends
/// with the help text.
CliArgs parseArgs(const std::vector<std::string>& argv);

/// Report payload goes to `out`, everything else to `err`.
int runCli(const CliArgs& args, std::ostream& out, std::ostream& err);

/// parseArgs + runCli with usage errors mapped to exit code 2.
int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace boolrev::cli
