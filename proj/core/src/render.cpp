// SPDX-License-Identifier: Apache-2.0
#include "boolrev/render.hpp"

#include <nlohmann/json.hpp>

#include "boolrev/monotone.hpp"

namespace boolrev {
namespace {

std::string quotedList(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += '"' + items[i] + '"';
  }
  return out;
}

std::string joined(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// Function of the repaired node after the whole bundle is applied.
std::string repairedFunction(const Model& model, const NodeRepair& repair, ExprSyntax syntax) {
  const Model repaired = applyRepair(model, {repair});
  return renderNodeFunction(repaired, repaired.index(repair.node), syntax);
}

const char* taskName(Task task) {
  switch (task) {
    case Task::kCheck: return "c";
    case Task::kRepair: return "r";
    case Task::kModels: return "m";
  }
  return "?";
}

nlohmann::json operationJson(const Model& model, const NodeRepair& repair, const AtomicRepair& op) {
  return std::visit(
      [&](const auto& o) -> nlohmann::json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ChangeFunction>) {
          return {{"op", "change_function"},
                  {"node", o.node},
                  {"function", repairedFunction(model, repair, ExprSyntax::kReport)}};
        } else if constexpr (std::is_same_v<T, FlipEdgeSign>) {
          return {{"op", "flip_sign"},
                  {"source", o.source},
                  {"target", o.target},
                  {"sign", std::string(signName(o.sign))}};
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          return {{"op", "remove_edge"},
                  {"source", o.source},
                  {"target", o.target},
                  {"function", repairedFunction(model, repair, ExprSyntax::kReport)}};
        } else {
          return {{"op", "add_edge"},
                  {"source", o.source},
                  {"target", o.target},
                  {"sign", std::string(signName(o.sign))},
                  {"function", repairedFunction(model, repair, ExprSyntax::kReport)}};
        }
      },
      op);
}

std::string compactOperation(const Model& model, const NodeRepair& repair, const AtomicRepair& op) {
  return std::visit(
      [&](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ChangeFunction>) {
          return "change(" + o.node + "," + repairedFunction(model, repair, ExprSyntax::kReport) + ")";
        } else if constexpr (std::is_same_v<T, FlipEdgeSign>) {
          return "flip(" + o.source + "," + o.target + "," + std::string(signName(o.sign)) + ")";
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          return "remove(" + o.source + "," + o.target + "," +
                 repairedFunction(model, repair, ExprSyntax::kReport) + ")";
        } else {
          return "add(" + o.source + "," + o.target + "," + std::string(signName(o.sign)) + "," +
                 repairedFunction(model, repair, ExprSyntax::kReport) + ")";
        }
      },
      op);
}

std::string renderJson(const Model& model, const RunReport& report) {
  nlohmann::json out;
  out["task"] = taskName(report.task);
  out["consistent"] = report.consistency.consistent;
  out["inconsistent_nodes"] = nlohmann::json::array();
  for (const auto& set : report.consistency.sets) {
    out["inconsistent_nodes"].push_back({{"nodes", set.nodes}, {"profiles", set.profiles}});
  }
  out["solutions"] = nlohmann::json::array();
  for (const auto& s : report.solutions) {
    nlohmann::json sol{{"operations_total", s.total_operations},
                       {"sub_optimal", s.sub_optimal},
                       {"nodes", nlohmann::json::array()}};
    for (const auto& [node, repairs] : s.nodes) {
      nlohmann::json entry{{"node", node}, {"repairs", nlohmann::json::array()}};
      for (const auto& r : repairs) {
        nlohmann::json ops = nlohmann::json::array();
        for (const auto& op : r.ops) ops.push_back(operationJson(model, r, op));
        entry["repairs"].push_back({{"ops", std::move(ops)}});
      }
      sol["nodes"].push_back(std::move(entry));
    }
    out["solutions"].push_back(std::move(sol));
  }
  out["repaired_models"] = report.repaired_models;
  return out.dump(2) + "\n";
}

std::string renderCompact(const Model& model, const RunReport& report) {
  std::string out;
  const auto& c = report.consistency;
  if (c.consistent) return "consistent\n";
  if (report.task == Task::kCheck) {
    for (const auto& set : c.sets) {
      out += "inconsistent;" + joined(set.nodes, ',') + ";" + joined(set.profiles, ',') + "\n";
    }
    return out;
  }
  if (report.task == Task::kModels) {
    for (const auto& path : report.repaired_models) out += "model;" + path + "\n";
    return out;
  }
  for (const auto& s : report.solutions) {
    out += std::to_string(s.total_operations) + (s.sub_optimal ? ";sub" : ";opt");
    for (const auto& [node, repairs] : s.nodes) {
      out += ";" + node + "=";
      for (std::size_t k = 0; k < repairs.size(); ++k) {
        if (k) out += '/';
        for (std::size_t i = 0; i < repairs[k].ops.size(); ++i) {
          if (i) out += '+';
          out += compactOperation(model, repairs[k], repairs[k].ops[i]);
        }
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string describeOperation(const Model& model, const NodeRepair& repair, const AtomicRepair& op) {
  return std::visit(
      [&](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ChangeFunction>) {
          return "Change function of " + o.node + " to: " +
                 repairedFunction(model, repair, ExprSyntax::kReport);
        } else if constexpr (std::is_same_v<T, FlipEdgeSign>) {
          return "Flip sign of edge (" + o.source + "," + o.target + ") to: " +
                 std::string(signName(o.sign));
        } else if constexpr (std::is_same_v<T, RemoveEdge>) {
          return "Remove edge (" + o.source + "," + o.target + "), new function: " +
                 repairedFunction(model, repair, ExprSyntax::kReport);
        } else {
          return "Add edge (" + o.source + "," + o.target + ") with sign " +
                 std::string(signName(o.sign)) + ", new function: " +
                 repairedFunction(model, repair, ExprSyntax::kReport);
        }
      },
      op);
}

std::string renderConsistencyHuman(const ConsistencyReport& report) {
  if (report.consistent) return "This model is consistent!\n";
  std::string out = "This model is inconsistent!\n";
  for (const auto& set : report.sets) {
    out += "  node(s) needing repair: " + quotedList(set.nodes) + "\n";
    out += "  present in profile(s): " + quotedList(set.profiles) + "\n";
  }
  return out;
}

std::string renderSolutionsHuman(const Model& model, const std::vector<Solution>& solutions) {
  std::string out;
  for (const auto& s : solutions) {
    if (s.sub_optimal) out += "(Sub-Optimal Solution)\n";
    out += "### Found solution with " + std::to_string(s.total_operations) + " repair operations.\n";
    for (const auto& [node, repairs] : s.nodes) {
      out += "\tInconsistent node " + node + ".\n";
      for (std::size_t k = 0; k < repairs.size(); ++k) {
        out += "\t\tRepair #" + std::to_string(k + 1) + ":\n";
        for (const auto& op : repairs[k].ops) {
          out += "\t\t\t" + describeOperation(model, repairs[k], op) + "\n";
        }
      }
    }
  }
  return out;
}

std::string renderRepairedModelsHuman(const std::vector<std::string>& paths) {
  std::string out;
  for (const auto& p : paths) out += "Repaired model: " + p + "\n";
  return out;
}

std::string renderReport(const Model& model, const RunReport& report, RenderFormat format) {
  switch (format) {
    case RenderFormat::kJson:
      return renderJson(model, report);
    case RenderFormat::kCompact:
      return renderCompact(model, report);
    case RenderFormat::kHuman:
      break;
  }
  if (report.task == Task::kCheck || report.consistency.consistent) {
    return renderConsistencyHuman(report.consistency);
  }
  if (report.task == Task::kRepair) return renderSolutionsHuman(model, report.solutions);
  return renderRepairedModelsHuman(report.repaired_models);
}

}  // namespace boolrev
