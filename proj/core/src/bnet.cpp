// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <set>

#include "boolrev/error.hpp"
#include "boolrev/expr.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/monotone.hpp"
#include "boolrev/text_util.hpp"

namespace boolrev {
namespace {

bool isHeader(std::string_view line) {
  std::string compact;
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return compact == "targets,factors";
}

[[noreturn]] void rethrowAtLine(const Error& e, std::size_t line) {
  throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
}

}  // namespace

Model parseBnet(std::string_view text) {
  struct Entry {
    std::string target;
    BoolExpr expr;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::set<std::string> targets;
  bool first = true;
  const auto lines = splitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (first && isHeader(line)) {
      first = false;
      continue;
    }
    first = false;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::kSyntax, "line " + std::to_string(i + 1) + ": expected 'target, expression'");
    }
    std::string target(trim(line.substr(0, comma)));
    if (!isValidNodeId(target)) {
      throw Error(ErrorCode::kSyntax,
                  "line " + std::to_string(i + 1) + ": invalid target '" + target + "'");
    }
    if (!targets.insert(target).second) {
      throw Error(ErrorCode::kDuplicateTarget,
                  "line " + std::to_string(i + 1) + ": target '" + target + "' defined twice");
    }
    try {
      entries.push_back({target, parseExpr(trim(line.substr(comma + 1))), i + 1});
    } catch (const Error& e) {
      rethrowAtLine(e, i + 1);
    }
  }

  std::vector<Edge> edges;
  std::map<std::string, NodeFunction> functions;
  for (const auto& entry : entries) {
    const auto vars = entry.expr.variables();
    for (const auto& var : vars) {
      if (!targets.count(var)) {
        throw Error(ErrorCode::kUndeclaredRegulator,
                    "line " + std::to_string(entry.line) + ": regulator '" + var +
                        "' has no rule of its own");
      }
    }
    if (vars.empty()) {
      functions.emplace(entry.target,
                        Constant{truthTable(entry.expr, {}).get(0)});
      continue;
    }
    try {
      SignedFunction sf = toSignedMonotone(entry.expr, vars);
      for (int j = 0; j < sf.function.arity(); ++j) {
        edges.push_back({sf.function.regulators()[j], entry.target, sf.signs[j]});
      }
      functions.emplace(entry.target, std::move(sf.function));
    } catch (const Error& e) {
      rethrowAtLine(e, entry.line);
    }
  }
  return Model::create({targets.begin(), targets.end()}, edges, functions, ModelFormat::kBnet);
}

std::string formatBnet(const Model& model) {
  std::string out = "targets, factors\n";
  for (int v = 0; v < model.size(); ++v) {
    out += model.nodes()[v];
    out += ", ";
    out += renderNodeFunction(model, v, ExprSyntax::kBnet);
    out += '\n';
  }
  return out;
}

}  // namespace boolrev
