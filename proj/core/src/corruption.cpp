// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <mutex>
#include <set>

#include "boolrev/bench.hpp"
#include "boolrev/dynamics.hpp"
#include "boolrev/error.hpp"
#include "boolrev/lattice.hpp"

namespace boolrev {
namespace {

struct Site {
  int node;
  std::vector<AtomicRepair> forward;
  NodeRepair inverse;
};

Clause squeeze(Clause c, int i) {
  const Clause low = c & ((Clause{1} << i) - 1);
  return low | ((c >> (i + 1)) << i);
}

std::vector<std::string> without(const std::vector<std::string>& names, int i) {
  std::vector<std::string> out = names;
  out.erase(out.begin() + i);
  return out;
}

// Sites of one corruption type among nodes not yet touched, in canonical
// (node, regulator, variant) order.
std::vector<Site> sites(const Model& model, CorruptionType type, const std::set<int>& touched,
                        Rng& rng) {
  std::vector<Site> out;
  for (int v = 0; v < model.size(); ++v) {
    if (touched.count(v) || model.isConstant(v)) continue;
    const auto& fn = std::get<MonotoneFunction>(model.function(v));
    const std::string& name = model.nodes()[v];
    const auto& signs = model.signs(v);
    const int arity = fn.arity();
    switch (type) {
      case CorruptionType::kFunctionChange: {
        auto options = immediateNeighbours(fn, Direction::kParents);
        for (auto& g : immediateNeighbours(fn, Direction::kChildren)) options.push_back(std::move(g));
        for (auto& g : options) {
          out.push_back({v, {ChangeFunction{name, std::move(g)}}, {name, {ChangeFunction{name, fn}}}});
        }
        break;
      }
      case CorruptionType::kSignFlip:
        for (int i = 0; i < arity; ++i) {
          const std::string& source = fn.regulators()[i];
          out.push_back({v,
                         {FlipEdgeSign{source, name, negate(signs[i])}},
                         {name, {FlipEdgeSign{source, name, signs[i]}}}});
        }
        break;
      case CorruptionType::kRemoveRegulator:
        if (arity < 2) break;
        for (int i = 0; i < arity; ++i) {
          const Clause bit = Clause{1} << i;
          std::vector<Clause> rest;
          const bool conj = std::all_of(fn.clauses().begin(), fn.clauses().end(),
                                        [&](Clause c) { return (c & bit) != 0; });
          const bool disj = std::find(fn.clauses().begin(), fn.clauses().end(), bit) != fn.clauses().end();
          if (!conj && !disj) continue;
          for (Clause c : fn.clauses()) {
            if (conj) {
              rest.push_back(squeeze(c & ~bit, i));
            } else if (c != bit) {
              rest.push_back(squeeze(c, i));
            }
          }
          sortClauses(rest);
          if (!isAntichain(rest) || !isNondegenerate(rest, arity - 1)) continue;
          const std::string& source = fn.regulators()[i];
          MonotoneFunction reduced(without(fn.regulators(), i), rest);
          out.push_back({v,
                         {RemoveEdge{source, name, std::move(reduced)}},
                         {name, {AddEdge{source, name, signs[i], fn}}}});
        }
        break;
      case CorruptionType::kAddRegulator: {
        if (arity + 1 > kMaxRegulators) break;
        for (int u = 0; u < model.size(); ++u) {
          const auto& regs = model.regulators(v);
          if (std::find(regs.begin(), regs.end(), u) != regs.end()) continue;
          const std::string& source = model.nodes()[u];
          auto names = fn.regulators();
          names.push_back(source);
          const Clause added = Clause{1} << arity;
          std::vector<Clause> clauses;
          // The sign and the and/or form are drawn per site so every
          // (node, source) pair stays equally likely.
          const Sign sign = rng.coin() ? Sign::kPositive : Sign::kNegative;
          if (rng.coin()) {
            for (Clause c : fn.clauses()) clauses.push_back(c | added);
          } else {
            clauses = fn.clauses();
            clauses.push_back(added);
          }
          out.push_back({v,
                         {AddEdge{source, name, sign, MonotoneFunction(names, clauses)}},
                         {name, {RemoveEdge{source, name, fn}}}});
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view corruptionName(CorruptionType type) {
  switch (type) {
    case CorruptionType::kFunctionChange: return "functionChange";
    case CorruptionType::kSignFlip: return "signFlip";
    case CorruptionType::kRemoveRegulator: return "removeRegulator";
    case CorruptionType::kAddRegulator: return "addRegulator";
  }
  return "?";
}

CorruptionType parseCorruptionType(std::string_view name) {
  for (auto t : {CorruptionType::kFunctionChange, CorruptionType::kSignFlip,
                 CorruptionType::kRemoveRegulator, CorruptionType::kAddRegulator}) {
    if (corruptionName(t) == name) return t;
  }
  throw Error(ErrorCode::kUsage, "unknown corruption type '" + std::string(name) + "'");
}

std::vector<std::vector<CorruptionType>> allCorruptionCombinations() {
  constexpr std::array kTypes{CorruptionType::kFunctionChange, CorruptionType::kSignFlip,
                              CorruptionType::kRemoveRegulator, CorruptionType::kAddRegulator};
  std::vector<std::vector<CorruptionType>> out;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<CorruptionType> combo;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1U << i)) combo.push_back(kTypes[i]);
    }
    out.push_back(std::move(combo));
  }
  return out;
}

CorruptedModel corruptModel(const Model& model, const std::vector<CorruptionType>& sequence,
                            Rng& rng) {
  CorruptedModel out{model, {}};
  std::set<int> touched;
  for (CorruptionType type : sequence) {
    auto candidates = sites(out.model, type, touched, rng);
    if (candidates.empty()) {
      throw Error(ErrorCode::kNoAdmissibleSite,
                  "no admissible site for " + std::string(corruptionName(type)));
    }
    Site& site = candidates[rng.below(candidates.size())];
    const std::string name = out.model.nodes()[site.node];
    out.model = applyRepair(out.model, {NodeRepair{name, site.forward}});
    touched.insert(site.node);
    out.log.push_back({type, name, std::move(site.inverse)});
  }
  return out;
}

CorruptedModel corruptModel(const Model& model, const CorruptionSpec& spec) {
  std::vector<CorruptionType> sequence;
  for (CorruptionType t : spec.combination) {
    for (int k = 0; k < spec.multiplicity; ++k) sequence.push_back(t);
  }
  Rng rng(spec.seed);
  return corruptModel(model, sequence, rng);
}

const std::vector<std::vector<Clause>>& nondegenerateFunctions(int arity) {
  static std::mutex mutex;
  static std::array<std::vector<std::vector<Clause>>, 6> cache;
  static std::array<bool, 6> ready{};
  if (arity < 1 || arity > 5) {
    throw Error(ErrorCode::kTooLarge, "function enumeration supports 1 to 5 regulators");
  }
  std::lock_guard lock(mutex);
  if (!ready[arity]) {
    std::vector<Clause> subsets;
    for (Clause c = 1; c <= fullMask(arity); ++c) subsets.push_back(c);
    std::vector<std::vector<Clause>> found;
    std::vector<Clause> chosen;
    // Depth-first over antichains: each subset is either skipped or added
    // when incomparable with every chosen one.
    auto extend = [&](auto&& self, std::size_t from) -> void {
      if (isNondegenerate(chosen, arity)) {
        auto f = chosen;
        sortClauses(f);
        found.push_back(std::move(f));
      }
      for (std::size_t i = from; i < subsets.size(); ++i) {
        const Clause c = subsets[i];
        bool free = true;
        for (Clause d : chosen) {
          if ((c & ~d) == 0 || (d & ~c) == 0) {
            free = false;
            break;
          }
        }
        if (!free) continue;
        chosen.push_back(c);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    extend(extend, 0);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), clauseLess);
    });
    cache[arity] = std::move(found);
    ready[arity] = true;
  }
  return cache[arity];
}

Model randomModel(int nodes, Rng& rng) {
  if (nodes < 1 || nodes > 99) throw Error(ErrorCode::kTooLarge, "random models have 1 to 99 nodes");
  std::vector<std::string> names;
  for (int i = 1; i <= nodes; ++i) names.push_back((i < 10 ? "n0" : "n") + std::to_string(i));
  while (true) {
    std::vector<Edge> edges;
    std::map<std::string, NodeFunction> functions;
    for (int v = 0; v < nodes; ++v) {
      const int k = std::min<int>(nodes, 1 + static_cast<int>(rng.below(3)));
      std::vector<int> pool(nodes);
      for (int i = 0; i < nodes; ++i) pool[i] = i;
      std::vector<std::string> regs;
      for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.below(nodes - i));
        std::swap(pool[i], pool[j]);
        regs.push_back(names[pool[i]]);
        edges.push_back({names[pool[i]], names[v], rng.coin() ? Sign::kPositive : Sign::kNegative});
      }
      functions.emplace(names[v], MonotoneFunction(regs, rng.pick(nondegenerateFunctions(k))));
    }
    Model model = Model::create(names, edges, functions, ModelFormat::kBnet);
    if (model.size() > kMaxEnumerationNodes || !enumerateSteadyStates(model).empty()) return model;
  }
}

}  // namespace boolrev
