// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolrev/model.hpp"
#include "boolrev/observation.hpp"
#include "boolrev/revision.hpp"
#include "network.hpp"

namespace boolrev::detail {

struct BoundRow {
  std::uint64_t known = 0;
  std::uint64_t values = 0;
};

/// A profile with node names resolved to model indices.
struct BoundProfile {
  std::string id;
  ObservationKind kind = ObservationKind::kSteady;
  UpdateScheme scheme = UpdateScheme::kSynchronous;
  std::vector<BoundRow> rows;
};

/// Throws Error(kUnknownNodeInProfile).
std::vector<BoundProfile> bindProfiles(const Model& model,
                                       const std::vector<ObservationProfile>& profiles);

/// Deadline and cancellation checks; throws Error(kTimeout).
class Budget {
 public:
  explicit Budget(const RevisionOptions& options) : options_(&options) {}
  void check() const;

 private:
  const RevisionOptions* options_;
};

/// Whether the profile can be met when the nodes of `freed` may take any
/// value on every step.
bool satisfiable(const Network& network, const BoundProfile& profile, std::uint64_t freed,
                 bool stuttering, const Budget& budget);

/// Minimal node sets as sorted index vectors, plus the indices of profiles
/// unsatisfiable with nothing freed.
struct MinimalSets {
  std::vector<std::vector<int>> sets;
  std::vector<int> failing_profiles;
};

MinimalSets findMinimalSets(const Network& network, const std::vector<BoundProfile>& profiles,
                            const RevisionOptions& options);

}  // namespace boolrev::detail
