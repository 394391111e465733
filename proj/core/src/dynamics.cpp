// SPDX-License-Identifier: Apache-2.0
#include "boolrev/dynamics.hpp"

#include <algorithm>

#include "boolrev/error.hpp"

namespace boolrev {
namespace {

void checkSize(const Model& model) {
  if (model.size() > kMaxStateNodes) {
    throw Error(ErrorCode::kTooLarge, "state-based analysis supports at most 64 nodes");
  }
}

}  // namespace

bool evalNode(const Model& model, int v, State s) {
  const auto& fn = model.function(v);
  if (const auto* c = std::get_if<Constant>(&fn)) return c->value;
  const auto& regs = model.regulators(v);
  const auto& signs = model.signs(v);
  std::uint32_t inputs = 0;
  for (std::size_t i = 0; i < regs.size(); ++i) {
    const bool bit = s.get(regs[i]) != (signs[i] == Sign::kNegative);
    if (bit) inputs |= std::uint32_t{1} << i;
  }
  return std::get<MonotoneFunction>(fn).evaluate(inputs);
}

std::vector<State> successors(const Model& model, State s, UpdateScheme scheme) {
  checkSize(model);
  const int n = model.size();
  State image;
  for (int v = 0; v < n; ++v) image.set(v, evalNode(model, v, s));
  std::vector<State> out;
  switch (scheme) {
    case UpdateScheme::kSynchronous:
      out.push_back(image);
      break;
    case UpdateScheme::kAsynchronous:
      for (int v = 0; v < n; ++v) {
        State t = s;
        t.set(v, image.get(v));
        out.push_back(t);
      }
      break;
    case UpdateScheme::kComplete: {
      if (n > kMaxEnumerationNodes) {
        throw Error(ErrorCode::kTooLarge, "complete successors limited to 24 nodes");
      }
      const std::uint64_t unstable = s.bits ^ image.bits;
      // Updating a subset V changes exactly the unstable nodes of V; the
      // unchanged state needs V to contain a stable node.
      for (std::uint64_t d = unstable;; d = (d - 1) & unstable) {
        if (d != 0 || unstable != (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) {
          out.push_back(State{s.bits ^ d});
        }
        if (d == 0) break;
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool isSteady(const Model& model, State s) {
  for (int v = 0; v < model.size(); ++v) {
    if (evalNode(model, v, s) != s.get(v)) return false;
  }
  return true;
}

std::vector<State> enumerateSteadyStates(const Model& model) {
  if (model.size() > kMaxEnumerationNodes) {
    throw Error(ErrorCode::kTooLarge, "steady-state enumeration limited to 24 nodes");
  }
  std::vector<State> out;
  const std::uint64_t count = std::uint64_t{1} << model.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (isSteady(model, State{bits})) out.push_back(State{bits});
  }
  return out;
}

}  // namespace boolrev
