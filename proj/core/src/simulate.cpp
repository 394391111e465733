// SPDX-License-Identifier: Apache-2.0
#include "boolrev/bench.hpp"
#include "boolrev/dynamics.hpp"

namespace boolrev {
namespace {

PartialState fullRow(const Model& model, State s) {
  PartialState row;
  for (int v = 0; v < model.size(); ++v) row.cells[model.nodes()[v]] = s.get(v);
  return row;
}

}  // namespace

ObservationProfile simulateObservations(const Model& model, UpdateScheme scheme, int steps,
                                        Rng& rng, std::string id) {
  ObservationProfile profile;
  profile.id = std::move(id);
  profile.kind = ObservationKind::kTimeSeries;
  profile.scheme = scheme;
  State s;
  for (int v = 0; v < model.size(); ++v) s.set(v, rng.coin());
  profile.rows[0] = fullRow(model, s);
  for (int t = 1; t <= steps; ++t) {
    s = rng.pick(successors(model, s, scheme));
    profile.rows[t] = fullRow(model, s);
  }
  return profile;
}

std::vector<ObservationProfile> steadyStateProfiles(const Model& model) {
  std::vector<ObservationProfile> out;
  for (State s : enumerateSteadyStates(model)) {
    ObservationProfile p;
    p.id = "s" + std::to_string(out.size() + 1);
    p.kind = ObservationKind::kSteady;
    p.rows[0] = fullRow(model, s);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace boolrev
