// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace boolrev {

/// Upper bound on model size for every state-based computation.
inline constexpr int kMaxStateNodes = 64;

/// A full assignment over a model's nodes; bit v is the value of node index v.
struct State {
  std::uint64_t bits = 0;

  bool get(int v) const { return (bits >> v) & 1U; }
  void set(int v, bool value) {
    bits = value ? (bits | (std::uint64_t{1} << v)) : (bits & ~(std::uint64_t{1} << v));
  }

  friend auto operator<=>(const State&, const State&) = default;
};

/// Observed cells keyed by node name; an absent node is a missing value.
struct PartialState {
  std::map<std::string, bool> cells;

  std::optional<bool> value(const std::string& node) const {
    auto it = cells.find(node);
    if (it == cells.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const PartialState&, const PartialState&) = default;
};

enum class UpdateScheme { kSynchronous, kAsynchronous, kComplete };

enum class ObservationKind { kSteady, kNotSteady, kTimeSeries };

std::string_view schemeName(UpdateScheme scheme);
std::string_view kindName(ObservationKind kind);

struct ObservationProfile {
  std::string id;
  ObservationKind kind = ObservationKind::kSteady;
  /// Set iff kind is kTimeSeries.
  std::optional<UpdateScheme> scheme;
  /// Steady kinds use the single key 0.
  std::map<int, PartialState> rows;

  friend bool operator==(const ObservationProfile&, const ObservationProfile&) = default;
};

/// Inserts all-missing rows for every absent index between the first and
/// last time point.
void fillTimeGaps(ObservationProfile& profile);

/// Throws Error(kSyntax) when the profile shape is invalid.
void validateProfile(const ObservationProfile& profile);

}  // namespace boolrev
