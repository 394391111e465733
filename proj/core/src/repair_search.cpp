// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "boolrev/error.hpp"
#include "boolrev/parallel.hpp"
#include "boolrev/revision.hpp"
#include "solver.hpp"

namespace boolrev {
namespace {

using detail::BoundProfile;
using detail::Budget;
using detail::Network;

// Flip subsets larger than this are not explored when combining sign flips
// with a function change.
constexpr int kMaxFlipSubset = 4;
// Cap on the number of alternative combinations re-checked per node set.
constexpr std::size_t kMaxCombinations = 20000;

struct Rule {
  std::vector<int> regulators;
  std::vector<Sign> signs;
  NodeFunction function;
};

struct Candidate {
  NodeRepair repair;
  Rule rule;
  int cost = 0;
};

std::string ruleKey(int v, std::uint64_t freed, const Rule& rule) {
  std::string key = std::to_string(v) + '/' + std::to_string(freed) + '/';
  for (std::size_t i = 0; i < rule.regulators.size(); ++i) {
    key += std::to_string(rule.regulators[i]);
    key += rule.signs[i] == Sign::kPositive ? '+' : '-';
  }
  key += '/';
  if (const auto* c = std::get_if<Constant>(&rule.function)) {
    key += c->value ? "T" : "F";
  } else {
    for (Clause c : std::get<MonotoneFunction>(rule.function).clauses()) {
      key += std::to_string(c);
      key += ',';
    }
  }
  return key;
}

class RepairSearch {
 public:
  RepairSearch(const Model& model, const std::vector<ObservationProfile>& profiles,
               const RevisionOptions& options)
      : model_(model),
        profiles_(detail::bindProfiles(model, profiles)),
        network_(model),
        options_(options),
        budget_(options) {
    for (const auto& name : options.fixed_nodes) fixed_nodes_.insert(model.index(name));
    for (const auto& [source, target] : options.fixed_edges) {
      if (!model.edgeSign(source, target)) {
        throw Error(ErrorCode::kUnknownNode,
                    "fixed edge (" + source + "," + target + ") is not in the model");
      }
      fixed_edges_.insert({model.index(source), model.index(target)});
    }
  }

  bool admissible(const std::vector<int>& set) const {
    return std::none_of(set.begin(), set.end(), [&](int v) { return fixed_nodes_.count(v) > 0; });
  }

  // Candidate repairs for node v while the rest of `set` stays free.
  std::vector<Candidate> nodeCandidates(int v, const std::vector<int>& set, bool exhaustive) {
    std::uint64_t freed = 0;
    for (int u : set) {
      if (u != v) freed |= std::uint64_t{1} << u;
    }
    std::vector<Candidate> out;
    // Sign and function repairs form one tier; edge removal and addition
    // are only tried when that tier is empty.
    auto run = [&](bool topology, auto&& cls) {
      if (topology && !exhaustive && !out.empty()) return;
      cls(v, freed, out);
    };
    run(false, [&](int n, std::uint64_t f, auto& o) { singleFlips(n, f, o); });
    run(false, [&](int n, std::uint64_t f, auto& o) { functionChanges(n, f, o); });
    run(false, [&](int n, std::uint64_t f, auto& o) { flipsWithChange(n, f, o); });
    run(true, [&](int n, std::uint64_t f, auto& o) { edgeRemovals(n, f, o); });
    if (options_.max_added_regulators >= 1) {
      run(true, [&](int n, std::uint64_t f, auto& o) { edgeAdditions(n, f, o); });
    }
    return out;
  }

  // All profiles hold with every chosen rule installed.
  bool consistentWith(const std::vector<std::pair<int, const Rule*>>& choice) const {
    Network net = network_;
    for (const auto& [v, rule] : choice) {
      net.setRule(v, detail::compileRule(rule->function, rule->regulators, rule->signs));
    }
    for (const auto& p : profiles_) {
      budget_.check();
      if (!detail::satisfiable(net, p, 0, options_.async_stuttering, budget_)) return false;
    }
    return true;
  }

  std::vector<Solution> solveSet(const std::vector<int>& set,
                                 std::vector<std::vector<Candidate>> candidates) {
    auto solutions = combine(set, candidates);
    if (solutions.empty() && set.size() > 1 && !options_.exhaustive_search) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        candidates[i] = nodeCandidates(set[i], set, true);
      }
      solutions = combine(set, candidates);
    }
    return solutions;
  }

  const Budget& budget() const { return budget_; }

 private:
  Rule currentRule(int v) const {
    return {model_.regulators(v), model_.signs(v), model_.function(v)};
  }

  bool edgeFixed(int source, int target) const {
    return fixed_edges_.count({source, target}) > 0;
  }

  bool holds(int v, std::uint64_t freed, const Rule& rule) {
    const std::string key = ruleKey(v, freed, rule);
    {
      std::lock_guard lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    budget_.check();
    Network net = network_;
    net.setRule(v, detail::compileRule(rule.function, rule.regulators, rule.signs));
    bool ok = true;
    for (const auto& p : profiles_) {
      if (!detail::satisfiable(net, p, freed, options_.async_stuttering, budget_)) {
        ok = false;
        break;
      }
    }
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(key, ok);
    return ok;
  }

  // Nearest functions over the rule's regulators that satisfy the node's
  // constraints; empty when none is reachable.
  std::vector<MonotoneFunction> nearest(int v, std::uint64_t freed, const Rule& base,
                                        const std::vector<MonotoneFunction>& seeds,
                                        bool allow_seed) {
    try {
      const LatticeHit hit = latticeDistance(
          seeds,
          [&](const MonotoneFunction& g) {
            Rule r = base;
            r.function = g;
            return holds(v, freed, r);
          },
          options_.lattice);
      if (hit.distance == 0 && !allow_seed) return {};
      return hit.witnesses;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kExhausted || e.code() == ErrorCode::kTooLarge) return {};
      throw;
    }
  }

  FlipEdgeSign flipOp(const Rule& rule, int i, int v) const {
    return {model_.nodes()[rule.regulators[i]], model_.nodes()[v], negate(rule.signs[i])};
  }

  void singleFlips(int v, std::uint64_t freed, std::vector<Candidate>& out) {
    const Rule base = currentRule(v);
    for (std::size_t i = 0; i < base.regulators.size(); ++i) {
      if (edgeFixed(base.regulators[i], v)) continue;
      Rule r = base;
      r.signs[i] = negate(r.signs[i]);
      if (holds(v, freed, r)) {
        out.push_back({{model_.nodes()[v], {flipOp(base, static_cast<int>(i), v)}}, r, 1});
      }
    }
  }

  void functionChanges(int v, std::uint64_t freed, std::vector<Candidate>& out) {
    const Rule base = currentRule(v);
    const std::string& name = model_.nodes()[v];
    if (const auto* c = std::get_if<Constant>(&base.function)) {
      Rule r = base;
      r.function = Constant{!c->value};
      if (holds(v, freed, r)) out.push_back({{name, {ChangeFunction{name, r.function}}}, r, 1});
      return;
    }
    const auto& fn = std::get<MonotoneFunction>(base.function);
    for (auto& g : nearest(v, freed, base, {fn}, false)) {
      Rule r = base;
      r.function = g;
      out.push_back({{name, {ChangeFunction{name, std::move(g)}}}, std::move(r), 1});
    }
  }

  void flipsWithChange(int v, std::uint64_t freed, std::vector<Candidate>& out) {
    const Rule base = currentRule(v);
    if (model_.isConstant(v)) return;
    const auto& fn = std::get<MonotoneFunction>(base.function);
    const std::string& name = model_.nodes()[v];
    std::vector<int> flippable;
    for (std::size_t i = 0; i < base.regulators.size(); ++i) {
      if (!edgeFixed(base.regulators[i], v)) flippable.push_back(static_cast<int>(i));
    }
    const int m = static_cast<int>(flippable.size());
    int best = kMaxFlipSubset + 2;
    std::vector<Candidate> found;
    auto offer = [&](Candidate c) {
      if (c.cost < best) {
        best = c.cost;
        found.clear();
      }
      if (c.cost == best) found.push_back(std::move(c));
    };
    for (int size = 1; size <= std::min(m, kMaxFlipSubset) && size <= best; ++size) {
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        Rule r = base;
        std::vector<AtomicRepair> flips;
        for (int p : pick) {
          const int i = flippable[p];
          flips.emplace_back(flipOp(base, i, v));
          r.signs[i] = negate(r.signs[i]);
        }
        if (size >= 2 && holds(v, freed, r)) {
          offer({{name, flips}, r, size});
        } else if (size + 1 <= best) {
          for (auto& g : nearest(v, freed, r, {fn}, false)) {
            Rule changed = r;
            changed.function = g;
            std::vector<AtomicRepair> ops{ChangeFunction{name, std::move(g)}};
            ops.insert(ops.end(), flips.begin(), flips.end());
            offer({{name, std::move(ops)}, std::move(changed), size + 1});
          }
        }
        int i = size - 1;
        while (i >= 0 && pick[i] == m - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    for (auto& c : found) out.push_back(std::move(c));
  }

  void edgeRemovals(int v, std::uint64_t freed, std::vector<Candidate>& out) {
    const Rule base = currentRule(v);
    if (model_.isConstant(v) || base.regulators.size() < 2) return;
    const auto& fn = std::get<MonotoneFunction>(base.function);
    const std::string& name = model_.nodes()[v];
    const int arity = fn.arity();
    for (int i = 0; i < arity; ++i) {
      if (edgeFixed(base.regulators[i], v)) continue;
      Rule reduced;
      std::vector<std::string> names;
      for (int j = 0; j < arity; ++j) {
        if (j == i) continue;
        reduced.regulators.push_back(base.regulators[j]);
        reduced.signs.push_back(base.signs[j]);
        names.push_back(fn.regulators()[j]);
      }
      // Cofactors at the removed regulator, re-indexed to the reduced order.
      auto squeeze = [i](Clause c) {
        const Clause low = c & ((Clause{1} << i) - 1);
        return low | ((c >> (i + 1)) << i);
      };
      std::vector<Clause> high;
      std::vector<Clause> low;
      for (Clause c : fn.clauses()) {
        high.push_back(squeeze(c));
        if (!((c >> i) & 1U)) low.push_back(squeeze(c));
      }
      minimizeClauses(high);
      minimizeClauses(low);
      std::set<std::vector<Clause>> seed_sets;
      for (const auto* cofactor : {&high, &low}) {
        for (auto& s : nearestNondegenerate(*cofactor, arity - 1)) seed_sets.insert(std::move(s));
      }
      std::vector<MonotoneFunction> seeds;
      for (const auto& s : seed_sets) seeds.emplace_back(names, s);
      for (auto& g : nearest(v, freed, reduced, seeds, true)) {
        Rule r = reduced;
        r.function = g;
        RemoveEdge op{model_.nodes()[base.regulators[i]], name, std::move(g)};
        out.push_back({{name, {std::move(op)}}, std::move(r), 1});
      }
    }
  }

  void edgeAdditions(int v, std::uint64_t freed, std::vector<Candidate>& out) {
    const Rule base = currentRule(v);
    const std::string& name = model_.nodes()[v];
    const bool constant = model_.isConstant(v);
    const int arity = static_cast<int>(base.regulators.size());
    if (arity + 1 > kMaxLatticeArity) return;
    for (int u = 0; u < model_.size(); ++u) {
      if (std::find(base.regulators.begin(), base.regulators.end(), u) != base.regulators.end()) {
        continue;
      }
      const std::string& source = model_.nodes()[u];
      for (Sign sign : {Sign::kPositive, Sign::kNegative}) {
        Rule extended = base;
        extended.regulators.push_back(u);
        extended.signs.push_back(sign);
        std::vector<std::string> names;
        if (!constant) names = std::get<MonotoneFunction>(base.function).regulators();
        names.push_back(source);
        const Clause added = Clause{1} << arity;
        std::vector<MonotoneFunction> seeds;
        if (constant) {
          seeds.emplace_back(names, std::vector<Clause>{added});
        } else {
          const auto& fn = std::get<MonotoneFunction>(base.function);
          std::vector<Clause> conj;
          for (Clause c : fn.clauses()) conj.push_back(c | added);
          std::vector<Clause> disj = fn.clauses();
          disj.push_back(added);
          seeds.emplace_back(names, conj);
          seeds.emplace_back(names, disj);
        }
        for (auto& g : nearest(v, freed, extended, seeds, true)) {
          Rule r = extended;
          r.function = g;
          AddEdge op{source, name, sign, std::move(g)};
          out.push_back({{name, {std::move(op)}}, std::move(r), 1});
        }
      }
    }
  }

  std::vector<Solution> combine(const std::vector<int>& set,
                                const std::vector<std::vector<Candidate>>& candidates) const {
    const std::size_t k = set.size();
    // Distinct costs per node, ascending.
    std::vector<std::vector<int>> costs(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (candidates[i].empty()) return {};
      for (const auto& c : candidates[i]) costs[i].push_back(c.cost);
      std::sort(costs[i].begin(), costs[i].end());
      costs[i].erase(std::unique(costs[i].begin(), costs[i].end()), costs[i].end());
    }
    std::vector<std::vector<int>> vectors{{}};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::vector<int>> grown;
      for (const auto& prefix : vectors) {
        for (int c : costs[i]) {
          auto next = prefix;
          next.push_back(c);
          grown.push_back(std::move(next));
        }
      }
      vectors = std::move(grown);
    }
    auto total = [](const std::vector<int>& cv) {
      int sum = 0;
      for (int c : cv) sum += c;
      return sum;
    };
    std::stable_sort(vectors.begin(), vectors.end(),
                     [&](const auto& a, const auto& b) { return total(a) < total(b); });

    std::vector<Solution> out;
    std::size_t checked = 0;
    for (const auto& cv : vectors) {
      std::vector<std::vector<const Candidate*>> pools(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (const auto& c : candidates[i]) {
          if (c.cost == cv[i]) pools[i].push_back(&c);
        }
      }
      std::vector<std::vector<const Candidate*>> good;
      std::vector<std::size_t> pick(k, 0);
      bool all_good = true;
      while (true) {
        if (k == 1) {
          good.push_back({pools[0][pick[0]]});
        } else {
          if (++checked > kMaxCombinations) break;
          std::vector<std::pair<int, const Rule*>> choice;
          std::vector<const Candidate*> combo;
          for (std::size_t i = 0; i < k; ++i) {
            choice.emplace_back(set[i], &pools[i][pick[i]]->rule);
            combo.push_back(pools[i][pick[i]]);
          }
          if (consistentWith(choice)) {
            good.push_back(std::move(combo));
          } else {
            all_good = false;
          }
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] + 1 == pools[i - 1].size()) pick[--i] = 0;
        if (i == 0) break;
        ++pick[i - 1];
      }
      if (good.empty()) continue;
      if (all_good) {
        Solution s;
        s.total_operations = total(cv);
        for (std::size_t i = 0; i < k; ++i) {
          std::vector<NodeRepair> reps;
          for (const auto* c : pools[i]) reps.push_back(c->repair);
          s.nodes.emplace_back(model_.nodes()[set[i]], std::move(reps));
        }
        out.push_back(std::move(s));
      } else {
        for (const auto& combo : good) {
          Solution s;
          s.total_operations = total(cv);
          for (std::size_t i = 0; i < k; ++i) {
            s.nodes.emplace_back(model_.nodes()[set[i]], std::vector<NodeRepair>{combo[i]->repair});
          }
          out.push_back(std::move(s));
        }
      }
      if (checked > kMaxCombinations) break;
    }
    return out;
  }

  const Model& model_;
  std::vector<BoundProfile> profiles_;
  Network network_;
  const RevisionOptions& options_;
  Budget budget_;
  std::set<int> fixed_nodes_;
  std::set<std::pair<int, int>> fixed_edges_;
  std::mutex memo_mutex_;
  std::map<std::string, bool> memo_;
};

// Levels 1 and 2 report a single model: the first alternative of each node.
Solution firstAlternative(Solution s) {
  for (auto& [node, repairs] : s.nodes) repairs.resize(1);
  return s;
}

}  // namespace

std::vector<Solution> searchRepairs(const Model& model,
                                    const std::vector<ObservationProfile>& profiles,
                                    const ConsistencyReport& report,
                                    const RevisionOptions& options) {
  if (options.max_added_regulators < 0 || options.max_added_regulators > 1) {
    throw Error(ErrorCode::kGuardOverflow,
                "at most one added regulator per repair is supported (got " +
                    std::to_string(options.max_added_regulators) + ")");
  }
  if (options.solutions_level < 1 || options.solutions_level > 4) {
    throw Error(ErrorCode::kUsage, "solutions level must be 1..4");
  }
  if (report.consistent) return {};
  RepairSearch search(model, profiles, options);

  std::vector<std::vector<int>> sets;
  for (const auto& entry : report.sets) {
    std::vector<int> set;
    for (const auto& name : entry.nodes) set.push_back(model.index(name));
    std::sort(set.begin(), set.end());
    if (search.admissible(set)) sets.push_back(std::move(set));
  }
  if (sets.empty()) {
    throw Error(ErrorCode::kNoRepairFound, "every minimal node set contains a fixed node");
  }

  auto solve = [&](const std::vector<std::vector<int>>& chosen) {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t s = 0; s < chosen.size(); ++s) {
      for (std::size_t i = 0; i < chosen[s].size(); ++i) jobs.emplace_back(s, i);
    }
    std::vector<std::vector<Candidate>> found(jobs.size());
    parallelFor(jobs.size(), [&](std::size_t j) {
      const auto& set = chosen[jobs[j].first];
      found[j] = search.nodeCandidates(set[jobs[j].second], set, options.exhaustive_search);
    });
    std::vector<std::vector<Solution>> per_set(chosen.size());
    std::vector<std::vector<std::vector<Candidate>>> grouped(chosen.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      grouped[jobs[j].first].push_back(std::move(found[j]));
    }
    parallelFor(chosen.size(), [&](std::size_t s) {
      per_set[s] = search.solveSet(chosen[s], std::move(grouped[s]));
    });
    return per_set;
  };

  std::vector<Solution> all;
  if (options.solutions_level == 1) {
    for (const auto& set : sets) {
      auto per_set = solve({set});
      if (!per_set[0].empty()) return {firstAlternative(per_set[0].front())};
    }
  } else {
    for (auto& list : solve(sets)) {
      for (auto& s : list) all.push_back(std::move(s));
    }
  }
  if (all.empty()) throw Error(ErrorCode::kNoRepairFound, "no repair satisfies the observations");

  int best = all.front().total_operations;
  for (const auto& s : all) best = std::min(best, s.total_operations);
  std::vector<Solution> out;
  for (auto& s : all) {
    if (options.solutions_level == 2) {
      if (s.total_operations == best) return {firstAlternative(std::move(s))};
      continue;
    }
    s.sub_optimal = s.total_operations > best;
    if (options.solutions_level == 3 && s.sub_optimal) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace boolrev
