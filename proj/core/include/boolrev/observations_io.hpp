// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolrev/observation.hpp"

namespace boolrev {

/// Kind (and scheme, for time series) declared next to an observation file.
struct ObservationBinding {
  ObservationKind kind = ObservationKind::kSteady;
  std::optional<UpdateScheme> scheme;

  friend bool operator==(const ObservationBinding&, const ObservationBinding&) = default;
};

/// `steady`, `notsteady`, `sync`, `async`, `complete`, optionally suffixed
/// with `updater`. Throws Error(kUsage).
ObservationBinding parseBindingToken(std::string_view token);

/// Missing cells: empty, `*`, `N/A`, `NaN`, `-`.
bool isMissingToken(std::string_view cell);

/// Steady layout has one empty leading header field, time-series layout two.
/// When `nodes` is given, columns outside it raise Error(kUnknownNodeColumn).
/// Throws Error(kSyntax | kUnknownNodeColumn | kNonBinaryCell |
/// kDuplicateProfileTimePair | kDuplicateProfile).
std::vector<ObservationProfile> parseObservationsCsv(std::string_view text,
                                                     const ObservationBinding& binding,
                                                     const std::vector<std::string>* nodes = nullptr);

/// Facts `exp(p).` and `obs_vlabel(p,v,S[,T]).` When `nodes` is given, other
/// node names raise Error(kUnknownNode). Throws Error(kSyntax |
/// kValueOutOfRange | kUnknownNode).
std::vector<ObservationProfile> parseObservationsLp(std::string_view text,
                                                    const ObservationBinding& binding,
                                                    const std::vector<std::string>* nodes = nullptr);

/// Dispatches on `.csv` / `.lp`. Throws Error(kIo) when unreadable.
std::vector<ObservationProfile> loadObservations(const std::string& path,
                                                 const ObservationBinding& binding,
                                                 const std::vector<std::string>* nodes = nullptr);

/// Profiles must share one layout (steady kinds or time series).
std::string formatObservationsCsv(const std::vector<ObservationProfile>& profiles,
                                  const std::vector<std::string>& columns);
std::string formatObservationsLp(const std::vector<ObservationProfile>& profiles);

}  // namespace boolrev
