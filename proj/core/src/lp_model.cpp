// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "boolrev/error.hpp"
#include "boolrev/model_io.hpp"
#include "facts.hpp"

namespace boolrev {
namespace detail {

std::vector<Fact> parseFacts(std::string_view text) {
  std::vector<Fact> facts;
  std::size_t pos = 0;
  std::size_t line = 1;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) + ": " + what);
  };
  auto skip = [&] {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '%') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  while (true) {
    skip();
    if (pos == text.size()) break;
    Fact fact;
    fact.line = line;
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a predicate name");
    fact.predicate = std::string(text.substr(start, pos - start));
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        skip();
        std::string arg;
        if (pos < text.size() && text[pos] == '"') {
          const std::size_t close = text.find('"', pos + 1);
          if (close == std::string_view::npos) fail("unterminated string");
          arg = std::string(text.substr(pos + 1, close - pos - 1));
          pos = close + 1;
        } else {
          const std::size_t arg_start = pos;
          while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
                 !std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
          }
          arg = std::string(text.substr(arg_start, pos - arg_start));
          if (arg.empty()) fail("empty argument in '" + fact.predicate + "'");
        }
        fact.args.push_back(std::move(arg));
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected ',' or ')' in '" + fact.predicate + "'");
      }
    }
    skip();
    if (pos == text.size() || text[pos] != '.') fail("expected '.' after '" + fact.predicate + "'");
    ++pos;
    facts.push_back(std::move(fact));
  }
  return facts;
}

std::string factTerm(const std::string& name) {
  if (!name.empty() && std::islower(static_cast<unsigned char>(name.front()))) return name;
  return '"' + name + '"';
}

}  // namespace detail

namespace {

[[noreturn]] void inconsistent(const detail::Fact& f, const std::string& what) {
  throw Error(ErrorCode::kInconsistentFacts, "line " + std::to_string(f.line) + ": " + what);
}

int parseIndex(const detail::Fact& f, const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value < 0) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kSyntax,
                "line " + std::to_string(f.line) + ": expected a number, got '" + text + "'");
  }
}

void expectArity(const detail::Fact& f, std::size_t n) {
  if (f.args.size() != n) {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(f.line) + ": '" + f.predicate +
                                        "' takes " + std::to_string(n) + " arguments");
  }
}

}  // namespace

Model parseLpModel(std::string_view text, std::vector<std::string>* warnings) {
  const auto facts = detail::parseFacts(text);
  std::vector<std::string> vertices;
  std::set<std::string> vertex_set;
  struct InEdge {
    std::string source;
    Sign sign;
  };
  std::map<std::string, std::vector<InEdge>> in_edges;
  std::map<std::string, std::set<int>> terms;
  std::map<std::string, std::map<int, std::vector<std::string>>> term_members;
  std::map<std::string, bool> constants;

  for (const auto& f : facts) {
    if (f.predicate == "vertex") {
      expectArity(f, 1);
      if (!isValidNodeId(f.args[0])) {
        throw Error(ErrorCode::kSyntax,
                    "line " + std::to_string(f.line) + ": invalid node '" + f.args[0] + "'");
      }
      if (vertex_set.insert(f.args[0]).second) vertices.push_back(f.args[0]);
    } else if (f.predicate == "edge") {
      expectArity(f, 3);
      const int s = parseIndex(f, f.args[2]);
      if (s > 1) inconsistent(f, "edge sign must be 0 or 1");
      auto& list = in_edges[f.args[1]];
      for (const auto& e : list) {
        if (e.source == f.args[0]) inconsistent(f, "duplicate edge");
      }
      list.push_back({f.args[0], s == 1 ? Sign::kPositive : Sign::kNegative});
    } else if (f.predicate == "functionOr") {
      expectArity(f, 2);
      const std::string& spec = f.args[1];
      const std::size_t dots = spec.find("..");
      if (dots == std::string::npos) {
        terms[f.args[0]].insert(parseIndex(f, spec));
      } else {
        const int lo = parseIndex(f, spec.substr(0, dots));
        const int hi = parseIndex(f, spec.substr(dots + 2));
        for (int t = lo; t <= hi; ++t) terms[f.args[0]].insert(t);
      }
    } else if (f.predicate == "functionAnd") {
      expectArity(f, 3);
      term_members[f.args[0]][parseIndex(f, f.args[1])].push_back(f.args[2]);
    } else if (f.predicate == "constant") {
      expectArity(f, 2);
      const int value = parseIndex(f, f.args[1]);
      if (value > 1) inconsistent(f, "constant value must be 0 or 1");
      constants[f.args[0]] = value == 1;
    } else {
      throw Error(ErrorCode::kSyntax,
                  "line " + std::to_string(f.line) + ": unknown predicate '" + f.predicate + "'");
    }
  }

  auto requireVertex = [&](const std::string& name, const char* where) {
    if (!vertex_set.count(name)) {
      throw Error(ErrorCode::kInconsistentFacts,
                  std::string(where) + " mentions undeclared vertex '" + name + "'");
    }
  };
  for (const auto& [target, list] : in_edges) {
    requireVertex(target, "edge");
    for (const auto& e : list) requireVertex(e.source, "edge");
  }

  std::vector<Edge> edges;
  std::map<std::string, NodeFunction> functions;
  for (const auto& v : vertices) {
    const auto& incoming = in_edges[v];
    if (constants.count(v)) {
      if (!incoming.empty() || terms.count(v)) {
        throw Error(ErrorCode::kInconsistentFacts, "constant node '" + v + "' has a function");
      }
      functions.emplace(v, Constant{constants[v]});
      continue;
    }
    if (!terms.count(v)) {
      throw Error(ErrorCode::kInconsistentFacts, "node '" + v + "' has no function");
    }
    std::vector<std::string> regulators;
    for (const auto& e : incoming) {
      regulators.push_back(e.source);
      edges.push_back({e.source, v, e.sign});
    }
    std::vector<Clause> clauses;
    for (int t : terms[v]) {
      Clause c = 0;
      for (const auto& member : term_members[v][t]) {
        auto it = std::find(regulators.begin(), regulators.end(), member);
        if (it == regulators.end()) {
          throw Error(ErrorCode::kInconsistentFacts,
                      "term " + std::to_string(t) + " of '" + v + "' uses '" + member +
                          "' without an edge");
        }
        c |= Clause{1} << (it - regulators.begin());
      }
      if (c == 0) {
        throw Error(ErrorCode::kInconsistentFacts,
                    "term " + std::to_string(t) + " of '" + v + "' is empty");
      }
      clauses.push_back(c);
    }
    for (const auto& [t, members] : term_members[v]) {
      if (!terms[v].count(t)) {
        throw Error(ErrorCode::kInconsistentFacts,
                    "term " + std::to_string(t) + " of '" + v + "' is not declared");
      }
    }
    const std::size_t before = clauses.size();
    minimizeClauses(clauses);
    if (clauses.size() != before && warnings) {
      warnings->push_back("function of '" + v + "' had subsumed terms; canonicalized");
    }
    functions.emplace(v, MonotoneFunction(regulators, clauses));
  }
  for (const auto& [name, fn] : terms) requireVertex(name, "functionOr");
  for (const auto& [name, value] : constants) requireVertex(name, "constant");
  return Model::create(vertices, edges, functions, ModelFormat::kLp);
}

std::string formatLpModel(const Model& model) {
  using detail::factTerm;
  std::string out;
  for (const auto& v : model.nodes()) out += "vertex(" + factTerm(v) + ").\n";
  for (const auto& e : model.edges()) {
    out += "edge(" + factTerm(e.source) + "," + factTerm(e.target) + "," +
           (e.sign == Sign::kPositive ? "1" : "0") + ").\n";
  }
  for (int v = 0; v < model.size(); ++v) {
    const std::string name = factTerm(model.nodes()[v]);
    const auto& fn = model.function(v);
    if (const auto* c = std::get_if<Constant>(&fn)) {
      out += "constant(" + name + "," + (c->value ? "1" : "0") + ").\n";
      continue;
    }
    const auto& mf = std::get<MonotoneFunction>(fn);
    const std::size_t n = mf.clauses().size();
    out += "functionOr(" + name + "," + (n == 1 ? "1" : "1.." + std::to_string(n)) + ").\n";
    for (std::size_t t = 0; t < n; ++t) {
      for (int i = 0; i < mf.arity(); ++i) {
        if ((mf.clauses()[t] >> i) & 1U) {
          out += "functionAnd(" + name + "," + std::to_string(t + 1) + "," +
                 factTerm(mf.regulators()[i]) + ").\n";
        }
      }
    }
  }
  return out;
}

}  // namespace boolrev
