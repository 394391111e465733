// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <memory>
#include <ostream>

#include "boolrev/error.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/revision.hpp"

namespace boolrev::cli {
namespace {

std::unique_ptr<CLI::App> makeApp(CliArgs& args, std::vector<std::string>& observations,
                                  std::string& task, std::string& format,
                                  std::vector<std::string>& edges) {
  auto owner = std::make_unique<CLI::App>(
      "Consistency checking and revision of Boolean logical models", "boolrev");
  CLI::App& app = *owner;
  app.set_help_flag("-h,--help", "show this help message and exit");
  app.add_option("-m,--model", args.model, "Input model file")->required();
  app.add_option("--observations", observations,
                 "List of observation files and updater pairs (also -obs).\n"
                 "Each observation must be followed by its updater type.\n"
                 "Example: -obs obs1.lp async obs2.lp sync\n"
                 "Or: -obs obs1.lp async -obs obs2.lp sync")
      ->expected(1, -1)
      ->allow_extra_args();
  app.add_option("-t,--task", task,
                 "Task to perform (default=r):\n"
                 "  c - check for consistency\n"
                 "  r - get repairs\n"
                 "  m - get repaired models")
      ->check(CLI::IsMember({"c", "r", "m"}));
  app.add_flag("--exhaustive-search", args.exhaustive_search,
               "Force exhaustive search of function repair operations");
  app.add_option("-s,--solutions", args.solutions,
                 "1 - first optimal solution (fastest)\n"
                 "2 - first solution optimal in repairs\n"
                 "3 - all optimal solutions (default)\n"
                 "4 - all optimal solutions, including sub-optimal repairs")
      ->check(CLI::Range(1, 4));
  app.add_option("-f,--format", format,
                 "Output format (default=h):\n"
                 "  c - compact\n"
                 "  j - json\n"
                 "  h - human-readable")
      ->check(CLI::IsMember({"c", "j", "h"}));
  app.add_option("--fixed-nodes", args.fixed_nodes, "Node ids not to repair, e.g. A B C");
  app.add_option("--fixed-edges", edges, "Edges not to repair, e.g. A,B C;D E:F");
  app.add_flag("-d,--debug", args.debug, "Print phase timings on standard error");
  return owner;
}

std::pair<std::string, std::string> splitEdge(const std::string& token) {
  const auto sep = token.find_first_of(",;:");
  if (sep == std::string::npos || sep == 0 || sep + 1 == token.size()) {
    throw Error(ErrorCode::kUsage, "fixed edge '" + token + "' must look like A,B");
  }
  return {token.substr(0, sep), token.substr(sep + 1)};
}

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return kExitUsage;
    case ErrorCode::kNoRepairFound:
    case ErrorCode::kUnrealizableProfile: return kExitNoRepair;
    case ErrorCode::kTimeout:
    case ErrorCode::kExhausted:
    case ErrorCode::kInvalidRepair:
    case ErrorCode::kGuardOverflow: return kExitFailure;
    default: return kExitParse;
  }
}

class PhaseTimer {
 public:
  PhaseTimer(bool enabled, std::ostream& err) : enabled_(enabled), err_(err) {}
  void lap(const char* phase) {
    const auto now = std::chrono::steady_clock::now();
    if (enabled_) {
      err_ << "[debug] " << phase << ": "
           << std::chrono::duration<double, std::milli>(now - last_).count() << " ms\n";
    }
    last_ = now;
  }

 private:
  bool enabled_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string helpText() {
  CliArgs args;
  std::vector<std::string> observations, edges;
  std::string task, format;
  return makeApp(args, observations, task, format, edges)->help();
}

CliArgs parseArgs(const std::vector<std::string>& argv) {
  CliArgs args;
  std::vector<std::string> observations, edges;
  std::string task = "r", format = "h";
  auto owner = makeApp(args, observations, task, format, edges);
  CLI::App& app = *owner;

  // CLI11 has no single-dash long names; `-obs` is rewritten to its long form.
  std::vector<std::string> rewritten;
  for (const auto& a : argv) rewritten.push_back(a == "-obs" ? "--observations" : a);
  std::vector<std::string> reversed(rewritten.rbegin(), rewritten.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    args.help = true;
    return args;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::kUsage, std::string(e.what()) + "\n\n" + app.help());
  }

  const Task tasks[] = {Task::kCheck, Task::kRepair, Task::kModels};
  args.task = tasks[std::string("crm").find(task[0])];
  const RenderFormat formats[] = {RenderFormat::kCompact, RenderFormat::kJson, RenderFormat::kHuman};
  args.format = formats[std::string("cjh").find(format[0])];

  if (observations.size() % 2 != 0) {
    throw Error(ErrorCode::kUsage,
                "each observation file must be followed by its updater type\n\n" + app.help());
  }
  for (std::size_t i = 0; i < observations.size(); i += 2) {
    try {
      args.observations.push_back(
          {observations[i], parseBindingToken(observations[i + 1]), observations[i + 1]});
    } catch (const Error& e) {
      throw Error(ErrorCode::kUsage, std::string(e.what()) + "\n\n" + app.help());
    }
  }
  if (args.observations.empty() && args.task != Task::kCheck) {
    throw Error(ErrorCode::kUsage, "tasks r and m need at least one -obs pair\n\n" + app.help());
  }
  for (const auto& e : edges) args.fixed_edges.push_back(splitEdge(e));
  return args;
}

int runCli(const CliArgs& args, std::ostream& out, std::ostream& err) {
  if (args.help) {
    out << helpText();
    return kExitOk;
  }
  PhaseTimer timer(args.debug, err);
  Model model = [&] {
    try {
      std::vector<std::string> warnings;
      Model m = loadModel(args.model, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      return m;
    } catch (const Error& e) {
      throw Error(e.code() == ErrorCode::kIo ? ErrorCode::kSyntax : e.code(), e.what());
    }
  }();
  std::vector<ObservationProfile> profiles;
  for (const auto& input : args.observations) {
    try {
      auto loaded = loadObservations(input.path, input.binding, &model.nodes());
      profiles.insert(profiles.end(), loaded.begin(), loaded.end());
    } catch (const Error& e) {
      throw Error(e.code() == ErrorCode::kIo ? ErrorCode::kSyntax : e.code(), e.what());
    }
  }
  timer.lap("parse");

  RevisionOptions options;
  options.exhaustive_search = args.exhaustive_search;
  options.solutions_level = args.solutions;
  options.fixed_nodes = args.fixed_nodes;
  options.fixed_edges = args.fixed_edges;

  RunReport report;
  report.task = args.task;
  report.consistency = checkConsistency(model, profiles, options);
  timer.lap("consistency");
  if (!report.consistency.consistent && args.task != Task::kCheck) {
    report.solutions = searchRepairs(model, profiles, report.consistency, options);
    timer.lap("repair");
    if (args.task == Task::kModels) {
      report.repaired_models =
          generateRepairedModels(model, profiles, report.solutions, args.model, options);
      timer.lap("models");
    }
  }
  out << renderReport(model, report, args.format);
  return kExitOk;
}

int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    return runCli(parseArgs(argv), out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kIo) return kExitIo;
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace boolrev::cli
