// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "boolrev/model.hpp"
#include "boolrev/observation.hpp"

namespace boolrev {

/// Value of node v's function at state s. Negative edges complement the
/// regulator before clause evaluation; constants return their value.
bool evalNode(const Model& model, int v, State s);

/// Successor states, sorted and deduplicated. Asynchronous steps may stutter
/// on a stable node.
std::vector<State> successors(const Model& model, State s, UpdateScheme scheme);

bool isSteady(const Model& model, State s);

/// Largest model accepted by enumerateSteadyStates.
inline constexpr int kMaxEnumerationNodes = 24;

/// All fixed points, in increasing bit order. Throws Error(kTooLarge).
std::vector<State> enumerateSteadyStates(const Model& model);

}  // namespace boolrev
