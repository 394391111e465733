// SPDX-License-Identifier: Apache-2.0
#include "boolrev/observation.hpp"

#include "boolrev/error.hpp"

namespace boolrev {

std::string_view schemeName(UpdateScheme scheme) {
  switch (scheme) {
    case UpdateScheme::kSynchronous: return "sync";
    case UpdateScheme::kAsynchronous: return "async";
    case UpdateScheme::kComplete: return "complete";
  }
  return "?";
}

std::string_view kindName(ObservationKind kind) {
  switch (kind) {
    case ObservationKind::kSteady: return "steady";
    case ObservationKind::kNotSteady: return "notsteady";
    case ObservationKind::kTimeSeries: return "timeseries";
  }
  return "?";
}

void fillTimeGaps(ObservationProfile& profile) {
  if (profile.rows.empty()) return;
  const int first = profile.rows.begin()->first;
  const int last = profile.rows.rbegin()->first;
  for (int t = first; t <= last; ++t) profile.rows.try_emplace(t);
}

void validateProfile(const ObservationProfile& profile) {
  if (profile.id.empty()) throw Error(ErrorCode::kSyntax, "empty profile identifier");
  if (profile.kind == ObservationKind::kTimeSeries) {
    if (!profile.scheme) {
      throw Error(ErrorCode::kSyntax, "time series '" + profile.id + "' has no update scheme");
    }
    if (profile.rows.size() < 2) {
      throw Error(ErrorCode::kSyntax,
                  "time series '" + profile.id + "' needs at least two time points");
    }
    if (profile.rows.begin()->first < 0) {
      throw Error(ErrorCode::kSyntax, "negative time index in '" + profile.id + "'");
    }
  } else {
    if (profile.scheme) {
      throw Error(ErrorCode::kSyntax, "steady profile '" + profile.id + "' has an update scheme");
    }
    if (profile.rows.size() != 1) {
      throw Error(ErrorCode::kSyntax, "profile '" + profile.id + "' must have exactly one row");
    }
  }
}

}  // namespace boolrev
