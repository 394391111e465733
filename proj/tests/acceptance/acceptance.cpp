// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boolrev/bench.hpp"
#include "boolrev/dynamics.hpp"
#include "boolrev/error.hpp"
#include "boolrev/expr.hpp"
#include "boolrev/lattice.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/monotone.hpp"
#include "boolrev/observations_io.hpp"
#include "boolrev/quine_mccluskey.hpp"
#include "boolrev/render.hpp"
#include "boolrev/revision.hpp"
#include "cli_cases.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace boolrev;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fixture(const char* name) { return std::string(BOOLREV_FIXTURES) + "/" + name; }

std::uint64_t maskOf(const Model& m, const std::vector<std::string>& names) {
  std::uint64_t mask = 0;
  for (const auto& n : names) mask |= std::uint64_t{1} << m.index(n);
  return mask;
}

// 1. Minimum inconsistent node sets against exhaustive enumeration.
Outcome oracleMinimality() {
  Rng rng(20240601);
  int mismatches = 0;
  int inconsistent = 0;
  int unrealizable = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Model m = oracle::randomSmallModel(n, rng);
    const int count = 1 + static_cast<int>(rng.below(3));
    std::vector<ObservationProfile> profiles;
    for (int p = 0; p < count; ++p) {
      profiles.push_back(oracle::randomProfile(m, "p" + std::to_string(p), 6 / count, rng));
    }
    const auto expected = oracle::minimalSets(m, profiles);
    bool ok = true;
    try {
      const auto report = checkConsistency(m, profiles);
      if (!expected) {
        ok = false;
      } else {
        std::set<std::uint64_t> got;
        for (const auto& s : report.sets) got.insert(maskOf(m, s.nodes));
        const std::set<std::uint64_t> want(expected->sets.begin(), expected->sets.end());
        ok = report.consistent == want.empty() && got == want;
        inconsistent += !report.consistent;
      }
    } catch (const Error& e) {
      ok = !expected && e.code() == ErrorCode::kUnrealizableProfile;
      unrealizable += ok;
    }
    if (!ok && mismatches++ == 0) first = "instance " + std::to_string(i) + "\n" + formatBnet(m);
  }
  return {mismatches == 0, "200 models, " + std::to_string(inconsistent) + " inconsistent, " +
                               std::to_string(unrealizable) + " unrealizable, " +
                               std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : "; " + first)};
}

// 2. Every emitted repaired model re-checks consistent; per-instance limit.
Outcome repairSoundness() {
  const auto combos = allCorruptionCombinations();
  constexpr std::array kModes{ObservationMode::kSteady, ObservationMode::kSync, ObservationMode::kAsync};
  int solved = 0;
  int models = 0;
  int failures = 0;
  int inconsistent = 0;
  double slowest = 0;
  std::string first;
  for (int i = 0; i < 150; ++i) {
    const int size = i % 2 == 0 ? 5 : 10;
    Rng rng(deriveSeed(77, static_cast<std::uint64_t>(i)));
    BenchInstance inst{"random" + std::to_string(size), randomModel(size, rng),
                       {combos[i % combos.size()], 1, 1, deriveSeed(78, static_cast<std::uint64_t>(i))},
                       kModes[i % kModes.size()], 5};
    const auto r = runInstance(inst, 60.0, 4, false);
    slowest = std::max(slowest, r.wall_seconds);
    inconsistent += r.inconsistent;
    const bool repaired = r.inconsistent && r.solved;
    solved += repaired;
    models += repaired ? r.repaired_models : 0;
    const bool ok = !r.timed_out && r.wall_seconds < 60.0 &&
                    (!repaired || (r.repaired_models > 0 && r.repair_recovers_consistency));
    if (!ok && failures++ == 0) first = "instance " + std::to_string(i) + ": " + r.error;
  }
  std::ostringstream d;
  d << "150 instances, " << inconsistent << " inconsistent, " << solved << " repaired (" << models << " models re-checked), slowest "
    << slowest << " s, " << failures << " failures" << (first.empty() ? "" : "; " + first);
  return {failures == 0, d.str()};
}

// 3. The logged inverse of a single corruption appears among level-4
// solutions; every miss must still be a consistent alternative repair.
Outcome inverseRecovery() {
  constexpr std::array kTypes{CorruptionType::kFunctionChange, CorruptionType::kSignFlip,
                              CorruptionType::kRemoveRegulator, CorruptionType::kAddRegulator};
  int taken = 0;
  int found = 0;
  int unverified = 0;
  std::map<std::string, int> misses;
  for (int i = 0; taken < 100 && i < 3000; ++i) {
    const int size = i % 2 == 0 ? 5 : 10;
    Rng rng(deriveSeed(300, static_cast<std::uint64_t>(i)));
    BenchInstance inst{"random" + std::to_string(size), randomModel(size, rng),
                       {{kTypes[i % kTypes.size()]}, 1, 1, deriveSeed(301, static_cast<std::uint64_t>(i))},
                       ObservationMode::kSteady, 0};
    const auto r = runInstance(inst, 60.0, 4, true);
    if (r.skipped || !r.inconsistent) continue;
    ++taken;
    if (r.inverse_found.value_or(false)) {
      ++found;
      continue;
    }
    ++misses[std::string(corruptionName(kTypes[i % kTypes.size()]))];
    if (!(r.solved && r.repaired_models > 0 && r.repair_recovers_consistency)) ++unverified;
  }
  std::ostringstream d;
  d << found << "/" << taken << " inverses found";
  for (const auto& [type, count] : misses) d << ", " << count << " " << type << " misses";
  d << ", " << unverified << " misses without a verified alternative";
  return {taken == 100 && found * 10 >= taken * 9 && unverified == 0, d.str()};
}

// 4. Lattice covers against the pointwise order on all truth tables.
Outcome latticeCorrectness() {
  std::ostringstream d;
  bool pass = true;
  const std::map<int, std::size_t> expected_counts{{2, 2}, {3, 9}, {4, 114}};
  for (int n = 2; n <= 4; ++n) {
    const auto family = oracle::nondegenerateByTruthTable(n);
    const auto covers = oracle::hasseCovers(family, n);
    pass &= family.size() == expected_counts.at(n);
    int wrong = 0;
    for (std::size_t f = 0; f < family.size(); ++f) {
      std::set<std::vector<Clause>> up;
      std::set<std::vector<Clause>> down;
      for (const auto& [lo, hi] : covers) {
        if (lo == f) up.insert(family[hi]);
        if (hi == f) down.insert(family[lo]);
      }
      const auto parents = immediateNeighbourClauses(family[f], n, Direction::kParents);
      const auto children = immediateNeighbourClauses(family[f], n, Direction::kChildren);
      wrong += std::set<std::vector<Clause>>(parents.begin(), parents.end()) != up ||
               std::set<std::vector<Clause>>(children.begin(), children.end()) != down ||
               parents.size() != up.size() || children.size() != down.size();
    }
    pass &= wrong == 0;
    d << "n=" << n << ": " << family.size() << " functions, " << covers.size() << " covers, " << wrong
      << " mismatches; ";
  }
  return {pass, d.str()};
}

BoolExpr randomExpr(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || rng.below(4) == 0) {
    if (rng.below(12) == 0) return BoolExpr::constant(rng.coin());
    return BoolExpr::variable(rng.pick(vars));
  }
  switch (rng.below(3)) {
    case 0: return BoolExpr::negation(randomExpr(rng, vars, depth - 1));
    case 1: return BoolExpr::conjunction(randomExpr(rng, vars, depth - 1), randomExpr(rng, vars, depth - 1));
    default: return BoolExpr::disjunction(randomExpr(rng, vars, depth - 1), randomExpr(rng, vars, depth - 1));
  }
}

bool implies(const Implicant& term, const TruthTable& table) {
  for (std::uint64_t row = 0; row < table.rows(); ++row) {
    if (term.covers(static_cast<std::uint32_t>(row)) && !table.get(row)) return false;
  }
  return true;
}

// 5. Prime implicants reproduce the truth table and are prime.
Outcome quineMcCluskeyEquivalence() {
  Rng rng(5150);
  int wrong = 0;
  int not_prime = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng.below(6));
    std::vector<std::string> vars;
    for (int v = 0; v < n; ++v) vars.push_back("x" + std::to_string(v));
    const auto expr = randomExpr(rng, vars, 5);
    const auto table = truthTable(expr, vars);
    const auto primes = quineMcCluskey(table);
    for (std::uint64_t row = 0; row < table.rows(); ++row) {
      bool any = false;
      for (const auto& p : primes) any |= p.covers(static_cast<std::uint32_t>(row));
      if (any != table.get(row)) {
        ++wrong;
        break;
      }
    }
    for (const auto& p : primes) {
      bool prime = implies(p, table);
      for (int v = 0; v < n && prime; ++v) {
        const std::uint32_t bit = 1U << v;
        if (p.care & bit) prime = !implies(Implicant{p.care & ~bit, p.value & ~bit}, table);
      }
      not_prime += !prime;
    }
  }
  return {wrong == 0 && not_prime == 0, "1000 expressions, " + std::to_string(wrong) + " table mismatches, " +
                                            std::to_string(not_prime) + " non-prime terms"};
}

// 6. Human report goldens.
Outcome goldens() {
  int wrong = 0;
  std::string names;
  const auto cases = golden::cases();
  for (const auto& c : cases) {
    if (c.rendered != golden::readExpected(c)) {
      ++wrong;
      names += " " + c.name;
    }
  }
  return {wrong == 0 && !cases.empty(),
          std::to_string(cases.size()) + " transcripts, " + std::to_string(wrong) + " differ" + names};
}

std::set<std::map<std::string, bool>> cellsOf(const std::vector<ObservationProfile>& profiles) {
  std::set<std::map<std::string, bool>> out;
  for (const auto& p : profiles) out.insert(p.rows.at(0).cells);
  return out;
}

// 7. HSC case-study workflow.
Outcome caseStudy() {
  std::ostringstream d;
  const Model hsc = loadModel(fixture("hsc.bnet"));
  const auto steady = loadObservations(fixture("hsc_steady.csv"), parseBindingToken("steady"), &hsc.nodes());

  std::set<std::map<std::string, bool>> enumerated;
  for (const State s : enumerateSteadyStates(hsc)) {
    std::map<std::string, bool> cells;
    for (int v = 0; v < hsc.size(); ++v) cells[hsc.nodes()[v]] = s.get(v);
    enumerated.insert(cells);
  }
  const bool a = enumerated == cellsOf(steady) && enumerated.size() == 5;
  const bool b = checkConsistency(hsc, steady).consistent;

  auto with_ihsc = steady;
  for (auto& p : loadObservations(fixture("hsc_ihsc_plymph.csv"), parseBindingToken("async"), &hsc.nodes())) {
    with_ihsc.push_back(std::move(p));
  }
  const auto report = checkConsistency(hsc, with_ihsc);
  bool c = !report.consistent;
  bool spi1 = false;
  for (const auto& s : report.sets) spi1 |= std::count(s.nodes.begin(), s.nodes.end(), "Spi1") > 0;
  c &= spi1;
  d << "(a) " << enumerated.size() << " steady states " << (a ? "match" : "differ") << "; (b) "
    << (b ? "consistent" : "inconsistent") << "; (c) " << report.sets.size() << " minimal sets, Spi1 "
    << (spi1 ? "present" : "absent");

  bool dd = false;
  if (c) {
    const auto solutions = searchRepairs(hsc, with_ihsc, report);
    const auto repaired = repairedModels(hsc, with_ihsc, solutions);
    const Model& chosen = repaired.front();
    const int spi1_index = chosen.index("Spi1");
    d << "; (d) Spi1 := " << renderNodeFunction(chosen, spi1_index, ExprSyntax::kReport);
    const bool rechecked = checkConsistency(chosen, with_ihsc).consistent;

    auto round_two = with_ihsc;
    for (auto& p : loadObservations(fixture("hsc_qhsc_plymph.csv"), parseBindingToken("async"), &hsc.nodes())) {
      round_two.push_back(std::move(p));
    }
    const auto second = checkConsistency(chosen, round_two);
    bool one_op = false;
    if (!second.consistent) {
      const auto next = searchRepairs(chosen, round_two, second);
      for (const auto& s : next) {
        if (s.total_operations != 1) continue;
        one_op = true;
        for (const auto& [node, repairs] : s.nodes) {
          d << ", then " << describeOperation(chosen, repairs.front(), repairs.front().ops.front());
        }
        break;
      }
      const auto final_models = repairedModels(chosen, round_two, next);
      one_op &= !final_models.empty();
    }
    dd = rechecked && one_op;
  }
  return {a && b && c && dd, d.str()};
}

std::vector<ObservationProfile> sorted(std::vector<ObservationProfile> ps) {
  std::sort(ps.begin(), ps.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return ps;
}

bool isModelFacts(const std::string& path) {
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str().find("vertex(") != std::string::npos;
}

// 8. Format round trips.
Outcome roundTrip() {
  int models = 0;
  int wrong = 0;
  std::string names;
  for (const auto& entry : fs::directory_iterator(BOOLREV_FIXTURES)) {
    const auto ext = entry.path().extension();
    const auto path = entry.path().string();
    if (ext == ".bnet" || (ext == ".lp" && isModelFacts(path))) {
      ++models;
      const Model m = loadModel(path);
      const Model again = ext == ".bnet" ? parseBnet(formatBnet(m)) : parseLpModel(formatLpModel(m));
      const Model crossed = ext == ".bnet" ? parseLpModel(formatLpModel(m)) : parseBnet(formatBnet(m));
      const Model twice = ext == ".bnet" ? parseBnet(formatBnet(again)) : parseLpModel(formatLpModel(again));
      if (modelSignature(again) != modelSignature(m) || modelSignature(crossed) != modelSignature(m) ||
          formatModel(twice) != formatModel(again)) {
        ++wrong;
        names += " " + entry.path().filename().string();
      }
    }
  }
  int pairs = 0;
  for (const auto& [csv, lp, token] :
       std::vector<std::array<const char*, 3>>{{"cellcycle_steady.csv", "cellcycle_steady.lp", "steady"},
                                               {"hsc_qhsc_plymph.csv", "hsc_qhsc_plymph.lp", "async"}}) {
    ++pairs;
    const auto binding = parseBindingToken(token);
    const auto from_csv = sorted(loadObservations(fixture(csv), binding));
    const auto from_lp = sorted(loadObservations(fixture(lp), binding));
    const auto via_lp = sorted(parseObservationsLp(formatObservationsLp(from_csv), binding));
    if (from_csv != from_lp || via_lp != from_csv) {
      ++wrong;
      names += std::string(" ") + csv;
    }
  }
  return {wrong == 0 && models > 0, std::to_string(models) + " models, " + std::to_string(pairs) +
                                        " observation pairs, " + std::to_string(wrong) + " failures" + names};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

std::string shellQuote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// 9. CLI output does not depend on the worker count.
Outcome determinism() {
  const auto dir = (fs::temp_directory_path() / "boolrev_acceptance_cli").string();
  cli_cases::stageFixtures(dir);
  int differing = 0;
  std::string names;
  const auto cases = cli_cases::cases(dir);
  for (const auto& c : cases) {
    std::string args;
    for (const auto& a : c.args) args += " " + shellQuote(a);
    std::array<std::string, 4> outs;
    for (int k = 0; k < 4; ++k) {
      const char* threads = k % 2 == 0 ? "1" : "4";
      outs[k] = capture(std::string("BOOLREV_THREADS=") + threads + " " + shellQuote(BOOLREV_CLI_BINARY) + args +
                        " 2>/dev/null");
    }
    if (!std::all_of(outs.begin(), outs.end(), [&](const auto& o) { return o == outs[0]; })) {
      ++differing;
      names += " " + c.name;
    }
  }
  return {differing == 0, std::to_string(cases.size()) + " invocations x 4 runs (1 and 4 workers), " +
                              std::to_string(differing) + " differ" + names};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle minimality", oracleMinimality},
      {"repair soundness", repairSoundness},
      {"inverse recovery", inverseRecovery},
      {"lattice correctness", latticeCorrectness},
      {"Quine-McCluskey equivalence", quineMcCluskeyEquivalence},
      {"output goldens", goldens},
      {"case-study workflow", caseStudy},
      {"round trip", roundTrip},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): "
              << o.detail << " [" << static_cast<int>(secs) << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
