// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <bit>
#include <functional>

#include "boolrev/error.hpp"
#include "boolrev/parallel.hpp"
#include "boolrev/revision.hpp"
#include "solver.hpp"

namespace boolrev::detail {
namespace {

constexpr std::size_t kMaxLayerStates = std::size_t{1} << 22;
constexpr int kMaxEnumeratedMissing = 22;

bool steadySatisfiable(const Network& net, const BoundRow& row, std::uint64_t freed) {
  const std::uint64_t missing = net.allNodes() & ~row.known;
  std::vector<int> order;
  std::vector<int> depth_of(net.size(), -1);
  for (int v = 0; v < net.size(); ++v) {
    if ((missing >> v) & 1U) {
      depth_of[v] = static_cast<int>(order.size());
      order.push_back(v);
    }
  }
  // Each constrained node is checked right after its last missing input is set.
  std::vector<std::vector<int>> due(order.size() + 1);
  for (int u = 0; u < net.size(); ++u) {
    if ((freed >> u) & 1U) continue;
    int ready = 0;
    for (std::uint64_t d = net.dependencies(u) & missing; d; d &= d - 1) {
      ready = std::max(ready, depth_of[std::countr_zero(d)] + 1);
    }
    due[ready].push_back(u);
  }
  std::function<bool(std::size_t, std::uint64_t)> assign = [&](std::size_t depth,
                                                               std::uint64_t bits) {
    for (int u : due[depth]) {
      if (net.eval(u, bits) != static_cast<bool>((bits >> u) & 1U)) return false;
    }
    if (depth == order.size()) return true;
    const std::uint64_t bit = std::uint64_t{1} << order[depth];
    return assign(depth + 1, bits & ~bit) || assign(depth + 1, bits | bit);
  };
  return assign(0, row.values & row.known);
}

bool notSteadySatisfiable(const Network& net, const BoundRow& row, std::uint64_t freed) {
  if (freed != 0) return true;
  const std::uint64_t missing = net.allNodes() & ~row.known;
  for (int u = 0; u < net.size(); ++u) {
    const std::uint64_t open = net.dependencies(u) & missing;
    for (std::uint64_t sub = open;; sub = (sub - 1) & open) {
      const std::uint64_t bits = (row.values & row.known) | sub;
      if (net.eval(u, bits) != static_cast<bool>((bits >> u) & 1U)) return true;
      if (sub == 0) break;
    }
  }
  return false;
}

// Appends the successors of x that agree with `next` on its known cells.
void constrainedSuccessors(const Network& net, std::uint64_t x, const BoundRow& next,
                           UpdateScheme scheme, std::uint64_t freed, bool stuttering,
                           std::vector<std::uint64_t>& out) {
  const std::uint64_t all = net.allNodes();
  const std::uint64_t image = net.image(x);
  const std::uint64_t unstable = (x ^ image) & all & ~freed;
  auto matches = [&](std::uint64_t y) { return ((y ^ next.values) & next.known) == 0; };
  const bool may_stay =
      stuttering ? (freed != 0 || (all & ~freed & ~unstable) != 0) : unstable == 0;

  switch (scheme) {
    case UpdateScheme::kSynchronous: {
      const std::uint64_t base = (image & ~freed) | (next.values & next.known & freed);
      if (((base ^ next.values) & next.known & ~freed) != 0) return;
      const std::uint64_t open = freed & ~next.known & all;
      for (std::uint64_t sub = open;; sub = (sub - 1) & open) {
        out.push_back(base | sub);
        if (sub == 0) break;
      }
      return;
    }
    case UpdateScheme::kAsynchronous: {
      if (may_stay && matches(x)) out.push_back(x);
      for (std::uint64_t movers = unstable | (freed & all); movers; movers &= movers - 1) {
        const std::uint64_t y = x ^ (movers & (~movers + 1));
        if (matches(y)) out.push_back(y);
      }
      return;
    }
    case UpdateScheme::kComplete: {
      const std::uint64_t movable = unstable | (freed & all);
      const std::uint64_t forced = (x ^ next.values) & next.known;
      if (forced & ~movable) return;
      const std::uint64_t open = movable & ~next.known;
      for (std::uint64_t sub = open;; sub = (sub - 1) & open) {
        const std::uint64_t change = forced | sub;
        if (change != 0 || may_stay) out.push_back(x ^ change);
        if (sub == 0) break;
      }
      return;
    }
  }
}

bool seriesSatisfiable(const Network& net, const BoundProfile& profile, std::uint64_t freed,
                       bool stuttering, const Budget& budget) {
  const BoundRow& first = profile.rows.front();
  const std::uint64_t missing = net.allNodes() & ~first.known;
  if (std::popcount(missing) > kMaxEnumeratedMissing) {
    throw Error(ErrorCode::kTooLarge,
                "too many missing values in the first row of '" + profile.id + "'");
  }
  std::vector<std::uint64_t> layer;
  for (std::uint64_t sub = missing;; sub = (sub - 1) & missing) {
    layer.push_back((first.values & first.known) | sub);
    if (sub == 0) break;
  }
  std::vector<std::uint64_t> next;
  for (std::size_t t = 1; t < profile.rows.size(); ++t) {
    budget.check();
    next.clear();
    for (std::uint64_t x : layer) {
      constrainedSuccessors(net, x, profile.rows[t], profile.scheme, freed, stuttering, next);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) return false;
    if (next.size() > kMaxLayerStates) {
      throw Error(ErrorCode::kTooLarge, "reachable layer of '" + profile.id + "' is too large");
    }
    layer.swap(next);
  }
  return true;
}

}  // namespace

std::vector<BoundProfile> bindProfiles(const Model& model,
                                       const std::vector<ObservationProfile>& profiles) {
  if (model.size() > kMaxStateNodes) {
    throw Error(ErrorCode::kTooLarge, "state-based analysis supports at most 64 nodes");
  }
  std::vector<BoundProfile> out;
  for (const auto& p : profiles) {
    BoundProfile bound;
    bound.id = p.id;
    bound.kind = p.kind;
    if (p.scheme) bound.scheme = *p.scheme;
    ObservationProfile filled = p;
    if (p.kind == ObservationKind::kTimeSeries) fillTimeGaps(filled);
    for (const auto& [time, row] : filled.rows) {
      BoundRow br;
      for (const auto& [name, value] : row.cells) {
        auto idx = model.find(name);
        if (!idx) {
          throw Error(ErrorCode::kUnknownNodeInProfile,
                      "profile '" + p.id + "' mentions unknown node '" + name + "'");
        }
        br.known |= std::uint64_t{1} << *idx;
        if (value) br.values |= std::uint64_t{1} << *idx;
      }
      bound.rows.push_back(br);
    }
    if (bound.rows.empty()) bound.rows.emplace_back();
    out.push_back(std::move(bound));
  }
  return out;
}

void Budget::check() const {
  if (options_->cancel && options_->cancel->load(std::memory_order_relaxed)) {
    throw Error(ErrorCode::kTimeout, "cancelled");
  }
  if (options_->deadline && std::chrono::steady_clock::now() > *options_->deadline) {
    throw Error(ErrorCode::kTimeout, "time limit exceeded");
  }
}

bool satisfiable(const Network& network, const BoundProfile& profile, std::uint64_t freed,
                 bool stuttering, const Budget& budget) {
  switch (profile.kind) {
    case ObservationKind::kSteady:
      return steadySatisfiable(network, profile.rows.front(), freed);
    case ObservationKind::kNotSteady:
      return notSteadySatisfiable(network, profile.rows.front(), freed);
    case ObservationKind::kTimeSeries:
      return seriesSatisfiable(network, profile, freed, stuttering, budget);
  }
  return false;
}

MinimalSets findMinimalSets(const Network& network, const std::vector<BoundProfile>& profiles,
                            const RevisionOptions& options) {
  const Budget budget(options);
  MinimalSets result;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (!satisfiable(network, profiles[i], 0, options.async_stuttering, budget)) {
      result.failing_profiles.push_back(static_cast<int>(i));
    }
  }
  if (result.failing_profiles.empty()) return result;
  for (int i : result.failing_profiles) {
    if (!satisfiable(network, profiles[i], network.allNodes(), options.async_stuttering, budget)) {
      throw Error(ErrorCode::kUnrealizableProfile,
                  "profile '" + profiles[i].id + "' cannot be met by any repair");
    }
  }

  auto sufficient = [&](std::uint64_t freed) {
    for (int i : result.failing_profiles) {
      if (!satisfiable(network, profiles[i], freed, options.async_stuttering, budget)) return false;
    }
    return true;
  };

  const int n = network.size();
  constexpr std::size_t kBatch = 2048;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    bool more = true;
    while (more) {
      std::vector<std::vector<int>> batch;
      while (more && batch.size() < kBatch) {
        batch.push_back(combo);
        int i = k - 1;
        while (i >= 0 && combo[i] == n - k + i) --i;
        if (i < 0) {
          more = false;
        } else {
          ++combo[i];
          for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
      }
      std::vector<char> ok(batch.size(), 0);
      parallelFor(batch.size(), [&](std::size_t b) {
        budget.check();
        std::uint64_t freed = 0;
        for (int v : batch[b]) freed |= std::uint64_t{1} << v;
        ok[b] = sufficient(freed) ? 1 : 0;
      });
      for (std::size_t b = 0; b < batch.size(); ++b) {
        if (ok[b]) result.sets.push_back(std::move(batch[b]));
      }
    }
    if (!result.sets.empty()) break;
  }
  return result;
}

}  // namespace boolrev::detail

namespace boolrev {

ConsistencyReport checkConsistency(const Model& model,
                                   const std::vector<ObservationProfile>& profiles,
                                   const RevisionOptions& options) {
  const auto bound = detail::bindProfiles(model, profiles);
  const detail::Network network(model);
  const auto minimal = detail::findMinimalSets(network, bound, options);
  ConsistencyReport report;
  report.consistent = minimal.sets.empty();
  std::vector<std::string> failing;
  for (int i : minimal.failing_profiles) failing.push_back(bound[i].id);
  std::sort(failing.begin(), failing.end());
  for (const auto& set : minimal.sets) {
    InconsistentSet entry;
    for (int v : set) entry.nodes.push_back(model.nodes()[v]);
    entry.profiles = failing;
    report.sets.push_back(std::move(entry));
  }
  return report;
}

}  // namespace boolrev
