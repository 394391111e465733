// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolrev/model.hpp"
#include "boolrev/observation.hpp"
#include "boolrev/repair.hpp"
#include "boolrev/rng.hpp"

namespace boolrev {

enum class CorruptionType { kFunctionChange, kSignFlip, kRemoveRegulator, kAddRegulator };

std::string_view corruptionName(CorruptionType type);
/// Throws Error(kUsage).
CorruptionType parseCorruptionType(std::string_view name);

/// All 15 non-empty subsets of the four corruption types, in bitmask order.
std::vector<std::vector<CorruptionType>> allCorruptionCombinations();

struct CorruptionSpec {
  std::vector<CorruptionType> combination;
  /// Applications of each type.
  int multiplicity = 1;
  int instances = 1;
  std::uint64_t seed = 0;
};

struct CorruptionRecord {
  CorruptionType type;
  std::string node;
  /// Operation that undoes the corruption on the corrupted model.
  NodeRepair inverse;
};

struct CorruptedModel {
  Model model;
  std::vector<CorruptionRecord> log;
};

/// Applies every type of spec.combination spec.multiplicity times, each on a
/// different regulated node, drawing sites uniformly with Rng(spec.seed).
/// Throws Error(kNoAdmissibleSite).
CorruptedModel corruptModel(const Model& model, const CorruptionSpec& spec);
CorruptedModel corruptModel(const Model& model, const std::vector<CorruptionType>& sequence, Rng& rng);

/// Trajectory of `steps` transitions from a uniformly random initial state,
/// choosing uniformly among successors.
ObservationProfile simulateObservations(const Model& model, UpdateScheme scheme, int steps,
                                        Rng& rng, std::string id = "sim");

/// One steady profile per fixed point, ids s1, s2, ...
std::vector<ObservationProfile> steadyStateProfiles(const Model& model);

/// All non-degenerate monotone clause sets over `arity` positions
/// (arity <= 5), canonically sorted.
const std::vector<std::vector<Clause>>& nondegenerateFunctions(int arity);

/// Random model over `nodes` nodes named n01, n02, ...: each node gets 1 to
/// 3 regulators (self-loops allowed), random signs and a uniformly drawn
/// non-degenerate monotone function. Redrawn until a steady state exists.
Model randomModel(int nodes, Rng& rng);

enum class ObservationMode { kSteady, kSync, kAsync, kComplete };

struct BenchConfig {
  std::vector<std::string> model_paths;
  int random_models = 0;
  std::vector<int> random_sizes{5, 10};
  std::vector<std::vector<CorruptionType>> combinations = allCorruptionCombinations();
  std::vector<int> multiplicities{1};
  int instances = 1;
  std::uint64_t seed = 1;
  ObservationMode observations = ObservationMode::kSteady;
  std::vector<int> steps{3, 5, 10, 15, 20};
  double time_limit_seconds = 60.0;
  int solutions_level = 4;
  bool exhaustive_search = false;
  std::string output_csv;
};

/// key = value lines; `#` starts a comment. Throws Error(kSyntax).
BenchConfig parseBenchConfig(std::string_view text);

struct InstanceResult {
  std::string model;
  std::string combination;
  int multiplicity = 1;
  std::uint64_t seed = 0;
  std::string observations;
  bool skipped = false;  // no admissible corruption site
  bool inconsistent = false;
  bool solved = false;
  bool timed_out = false;
  double wall_seconds = 0.0;
  int min_nodes = 0;
  int operations = 0;
  int solutions = 0;
  int repaired_models = 0;
  bool repair_recovers_consistency = false;
  /// Set for single corruptions of an inconsistent instance.
  std::optional<bool> inverse_found;
  std::string error;
};

struct BenchInstance {
  std::string model_name;
  Model original;
  CorruptionSpec spec;
  ObservationMode observations = ObservationMode::kSteady;
  int steps = 0;
};

/// Runs one instance end to end; never throws for engine failures.
InstanceResult runInstance(const BenchInstance& instance, double time_limit_seconds,
                           int solutions_level, bool exhaustive_search);

/// Expands the configuration into instances (canonical order) and runs them.
std::vector<InstanceResult> runBenchmark(const BenchConfig& config);

std::string benchResultsCsv(const std::vector<InstanceResult>& results);
std::string benchSummary(const std::vector<InstanceResult>& results);

}  // namespace boolrev
