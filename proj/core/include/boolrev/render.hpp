// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "boolrev/model.hpp"
#include "boolrev/repair.hpp"

namespace boolrev {

enum class RenderFormat { kCompact, kJson, kHuman };

enum class Task { kCheck, kRepair, kModels };

/// Everything one run reports. Solutions and model paths are only meaningful
/// for the repair and model tasks of an inconsistent model.
struct RunReport {
  Task task = Task::kCheck;
  ConsistencyReport consistency;
  std::vector<Solution> solutions;
  std::vector<std::string> repaired_models;
};

/// `model` is the unrepaired model; functions in repair lines are shown as
/// they read after the node's repair is applied.
std::string renderReport(const Model& model, const RunReport& report, RenderFormat format);

std::string renderConsistencyHuman(const ConsistencyReport& report);
std::string renderSolutionsHuman(const Model& model, const std::vector<Solution>& solutions);
std::string renderRepairedModelsHuman(const std::vector<std::string>& paths);

/// One operation line without indentation, e.g.
/// `Flip sign of edge (cycb,cdc20) to: positive`.
std::string describeOperation(const Model& model, const NodeRepair& repair, const AtomicRepair& op);

}  // namespace boolrev
