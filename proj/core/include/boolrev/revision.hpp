// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolrev/lattice.hpp"
#include "boolrev/model.hpp"
#include "boolrev/observation.hpp"
#include "boolrev/repair.hpp"

namespace boolrev {

struct RevisionOptions {
  bool exhaustive_search = false;
  /// 1: first solution of the first admissible node set; 2: first solution
  /// with the fewest operations; 3: all solutions with the fewest
  /// operations; 4: all solutions, costlier ones flagged sub-optimal.
  int solutions_level = 3;
  std::vector<std::string> fixed_nodes;
  std::vector<std::pair<std::string, std::string>> fixed_edges;
  /// 0 disables edge addition; values above 1 are rejected.
  int max_added_regulators = 1;
  /// An asynchronous (or complete) step may leave the state unchanged by
  /// updating a stable node.
  bool async_stuttering = true;
  LatticeSearchLimits lattice;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const std::atomic<bool>* cancel = nullptr;
};

/// Minimum-cardinality node sets whose freeing satisfies all profiles.
/// Throws Error(kUnknownNodeInProfile), Error(kUnrealizableProfile),
/// Error(kTimeout).
ConsistencyReport checkConsistency(const Model& model,
                                   const std::vector<ObservationProfile>& profiles,
                                   const RevisionOptions& options = {});

/// Repairs for the node sets of `report`, ranked by options.solutions_level.
/// Throws Error(kNoRepairFound), Error(kGuardOverflow), Error(kTimeout).
std::vector<Solution> searchRepairs(const Model& model,
                                    const std::vector<ObservationProfile>& profiles,
                                    const ConsistencyReport& report,
                                    const RevisionOptions& options = {});

/// Every distinct model obtained from one alternative per node of a
/// solution, in discovery order; each is re-checked against the profiles.
std::vector<Model> repairedModels(const Model& model,
                                  const std::vector<ObservationProfile>& profiles,
                                  const std::vector<Solution>& solutions,
                                  const RevisionOptions& options = {});

/// Writes repairedModels next to `model_path` as `<stem>_<k><ext>` and
/// returns the paths. Throws Error(kNoRepairFound) for zero solutions and
/// Error(kIo).
std::vector<std::string> generateRepairedModels(const Model& model,
                                                const std::vector<ObservationProfile>& profiles,
                                                const std::vector<Solution>& solutions,
                                                const std::string& model_path,
                                                const RevisionOptions& options = {});

}  // namespace boolrev
