// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "boolrev/bench.hpp"
#include "boolrev/error.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/parallel.hpp"
#include "boolrev/revision.hpp"
#include "boolrev/text_util.hpp"

namespace boolrev {
namespace {

std::string_view modeName(ObservationMode mode) {
  switch (mode) {
    case ObservationMode::kSteady: return "steady";
    case ObservationMode::kSync: return "sync";
    case ObservationMode::kAsync: return "async";
    case ObservationMode::kComplete: return "complete";
  }
  return "?";
}

std::string combinationName(const std::vector<CorruptionType>& combo) {
  std::string out;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (i) out += '+';
    out += corruptionName(combo[i]);
  }
  return out;
}

std::vector<std::string> listValue(std::string_view value) {
  std::vector<std::string> out;
  for (const auto& item : split(value, ',')) {
    const auto t = trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

long long integer(const std::string& key, std::string_view text) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kSyntax, "'" + key + "' expects an integer, got '" + s + "'");
}

}  // namespace

BenchConfig parseBenchConfig(std::string_view text) {
  BenchConfig config;
  for (const auto& raw : splitLines(text)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kSyntax, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    auto ints = [&] {
      std::vector<int> out;
      for (const auto& item : listValue(value)) out.push_back(static_cast<int>(integer(key, item)));
      return out;
    };
    if (key == "models") {
      config.model_paths = listValue(value);
    } else if (key == "random_models") {
      config.random_models = static_cast<int>(integer(key, value));
    } else if (key == "random_sizes") {
      config.random_sizes = ints();
    } else if (key == "combinations") {
      if (value == "all") {
        config.combinations = allCorruptionCombinations();
      } else {
        config.combinations.clear();
        for (const auto& combo : listValue(value)) {
          std::vector<CorruptionType> types;
          for (const auto& name : split(combo, '+')) types.push_back(parseCorruptionType(trim(name)));
          config.combinations.push_back(std::move(types));
        }
      }
    } else if (key == "multiplicities") {
      config.multiplicities = ints();
    } else if (key == "instances") {
      config.instances = static_cast<int>(integer(key, value));
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(integer(key, value));
    } else if (key == "observations") {
      if (value == "steady") {
        config.observations = ObservationMode::kSteady;
      } else if (value == "sync") {
        config.observations = ObservationMode::kSync;
      } else if (value == "async") {
        config.observations = ObservationMode::kAsync;
      } else if (value == "complete") {
        config.observations = ObservationMode::kComplete;
      } else {
        throw Error(ErrorCode::kSyntax, "unknown observation mode '" + std::string(value) + "'");
      }
    } else if (key == "steps") {
      config.steps = ints();
    } else if (key == "time_limit") {
      try {
        config.time_limit_seconds = std::stod(std::string(value));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kSyntax, "'time_limit' expects seconds");
      }
    } else if (key == "solutions") {
      config.solutions_level = static_cast<int>(integer(key, value));
    } else if (key == "exhaustive") {
      config.exhaustive_search = value == "true" || value == "1";
    } else if (key == "output") {
      config.output_csv = std::string(value);
    } else {
      throw Error(ErrorCode::kSyntax, "unknown configuration key '" + key + "'");
    }
  }
  return config;
}

InstanceResult runInstance(const BenchInstance& instance, double time_limit_seconds,
                           int solutions_level, bool exhaustive_search) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  InstanceResult result;
  result.model = instance.model_name;
  result.combination = combinationName(instance.spec.combination);
  result.multiplicity = instance.spec.multiplicity;
  result.seed = instance.spec.seed;
  result.observations = std::string(modeName(instance.observations));
  if (instance.observations != ObservationMode::kSteady) {
    result.observations += std::to_string(instance.steps);
  }
  auto finish = [&] {
    result.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };

  CorruptedModel corrupted{instance.original, {}};
  try {
    corrupted = corruptModel(instance.original, instance.spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoAdmissibleSite) throw;
    result.skipped = true;
    result.error = e.what();
    return finish();
  }

  std::vector<ObservationProfile> profiles = steadyStateProfiles(instance.original);
  if (instance.observations != ObservationMode::kSteady) {
    const UpdateScheme scheme = instance.observations == ObservationMode::kSync
                                    ? UpdateScheme::kSynchronous
                                    : instance.observations == ObservationMode::kAsync
                                          ? UpdateScheme::kAsynchronous
                                          : UpdateScheme::kComplete;
    Rng rng(deriveSeed(instance.spec.seed, 0x51u));
    profiles.push_back(simulateObservations(instance.original, scheme, instance.steps, rng, "ts1"));
  }

  RevisionOptions options;
  options.solutions_level = solutions_level;
  options.exhaustive_search = exhaustive_search;
  options.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(time_limit_seconds));
  try {
    const ConsistencyReport report = checkConsistency(corrupted.model, profiles, options);
    if (report.consistent) {
      result.solved = true;
      result.repair_recovers_consistency = true;
      return finish();
    }
    result.inconsistent = true;
    result.min_nodes = static_cast<int>(report.sets.front().nodes.size());
    const auto solutions = searchRepairs(corrupted.model, profiles, report, options);
    result.solved = true;
    result.solutions = static_cast<int>(solutions.size());
    result.operations = solutions.front().total_operations;
    for (const auto& s : solutions) result.operations = std::min(result.operations, s.total_operations);
    if (corrupted.log.size() == 1) {
      const std::string target = modelSignature(instance.original);
      const auto& node = corrupted.log.front().node;
      bool found = false;
      for (const auto& s : solutions) {
        for (const auto& [name, repairs] : s.nodes) {
          if (name != node || s.nodes.size() != 1) continue;
          for (const auto& r : repairs) {
            found = found || modelSignature(applyRepair(corrupted.model, {r})) == target;
          }
        }
      }
      result.inverse_found = found;
    }
    try {
      result.repaired_models =
          static_cast<int>(repairedModels(corrupted.model, profiles, solutions, options).size());
      result.repair_recovers_consistency = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidRepair) throw;
      result.error = e.what();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTimeout) {
      result.timed_out = true;
      result.solved = false;
    }
    result.error = e.what();
  }
  return finish();
}

std::vector<InstanceResult> runBenchmark(const BenchConfig& config) {
  std::vector<std::pair<std::string, Model>> models;
  for (const auto& path : config.model_paths) {
    models.emplace_back(std::filesystem::path(path).stem().string(), loadModel(path));
  }
  for (int i = 0; i < config.random_models; ++i) {
    for (int size : config.random_sizes) {
      Rng rng(deriveSeed(config.seed, 1000 + 100 * static_cast<std::uint64_t>(size) + i));
      models.emplace_back("random" + std::to_string(size) + "_" + std::to_string(i + 1),
                          randomModel(size, rng));
    }
  }
  const std::vector<int> steps =
      config.observations == ObservationMode::kSteady ? std::vector<int>{0} : config.steps;

  std::vector<BenchInstance> instances;
  std::uint64_t counter = 0;
  for (const auto& [name, model] : models) {
    for (const auto& combo : config.combinations) {
      for (int m : config.multiplicities) {
        for (int s : steps) {
          for (int i = 0; i < config.instances; ++i) {
            BenchInstance inst{name, model, {combo, m, 1, deriveSeed(config.seed, counter++)},
                               config.observations, s};
            instances.push_back(std::move(inst));
          }
        }
      }
    }
  }
  std::vector<InstanceResult> results(instances.size());
  parallelFor(instances.size(), [&](std::size_t i) {
    results[i] = runInstance(instances[i], config.time_limit_seconds, config.solutions_level,
                             config.exhaustive_search);
  });
  return results;
}

std::string benchResultsCsv(const std::vector<InstanceResult>& results) {
  std::ostringstream out;
  out << "model,combination,multiplicity,seed,observations,skipped,inconsistent,solved,timed_out,"
         "wall_seconds,min_nodes,operations,solutions,repaired_models,repair_recovers_consistency,"
         "inverse_found\n";
  for (const auto& r : results) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.6f", r.wall_seconds);
    out << r.model << ',' << r.combination << ',' << r.multiplicity << ',' << r.seed << ','
        << r.observations << ',' << r.skipped << ',' << r.inconsistent << ',' << r.solved << ','
        << r.timed_out << ',' << seconds << ',' << r.min_nodes << ',' << r.operations << ','
        << r.solutions << ',' << r.repaired_models << ',' << r.repair_recovers_consistency << ','
        << (r.inverse_found ? (*r.inverse_found ? "1" : "0") : "") << '\n';
  }
  return out.str();
}

std::string benchSummary(const std::vector<InstanceResult>& results) {
  int run = 0, skipped = 0, inconsistent = 0, solved = 0, timed_out = 0, recovered = 0;
  int inverse_total = 0, inverse_found = 0;
  double seconds = 0.0;
  for (const auto& r : results) {
    if (r.skipped) {
      ++skipped;
      continue;
    }
    ++run;
    inconsistent += r.inconsistent;
    solved += r.solved;
    timed_out += r.timed_out;
    recovered += r.solved && r.repair_recovers_consistency;
    seconds += r.wall_seconds;
    if (r.inverse_found) {
      ++inverse_total;
      inverse_found += *r.inverse_found;
    }
  }
  std::ostringstream out;
  out << "instances: " << run << " run, " << skipped << " skipped (no admissible site)\n";
  out << "inconsistent after corruption: " << inconsistent << "\n";
  out << "solved: " << solved << ", timed out: " << timed_out << "\n";
  out << "solved with all repaired models consistent: " << recovered << "/" << solved << "\n";
  if (inverse_total > 0) {
    out << "inverse repair among solutions (single corruptions): " << inverse_found << "/"
        << inverse_total << "\n";
  }
  char mean[32];
  std::snprintf(mean, sizeof mean, "%.3f", run ? seconds / run : 0.0);
  out << "mean wall time (s): " << mean << "\n";
  return out.str();
}

}  // namespace boolrev
