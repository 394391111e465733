// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "boolrev/error.hpp"
#include "boolrev/model_io.hpp"
#include "boolrev/revision.hpp"

namespace boolrev {

std::vector<Model> repairedModels(const Model& model,
                                  const std::vector<ObservationProfile>& profiles,
                                  const std::vector<Solution>& solutions,
                                  const RevisionOptions& options) {
  std::vector<Model> out;
  std::set<std::string> seen;
  for (const auto& solution : solutions) {
    const std::size_t k = solution.nodes.size();
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<NodeRepair> choice;
      for (std::size_t i = 0; i < k; ++i) choice.push_back(solution.nodes[i].second[pick[i]]);
      Model repaired = applyRepair(model, choice);
      if (seen.insert(modelSignature(repaired)).second) {
        if (!checkConsistency(repaired, profiles, options).consistent) {
          throw Error(ErrorCode::kInvalidRepair, "repaired model failed the consistency re-check");
        }
        out.push_back(std::move(repaired));
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] + 1 == solution.nodes[i - 1].second.size()) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }
  }
  return out;
}

std::vector<std::string> generateRepairedModels(const Model& model,
                                                const std::vector<ObservationProfile>& profiles,
                                                const std::vector<Solution>& solutions,
                                                const std::string& model_path,
                                                const RevisionOptions& options) {
  if (solutions.empty()) throw Error(ErrorCode::kNoRepairFound, "no solutions to apply");
  std::vector<std::string> paths;
  int k = 0;
  for (const auto& repaired : repairedModels(model, profiles, solutions, options)) {
    paths.push_back(numberedPath(model_path, ++k));
    writeModel(repaired, paths.back());
  }
  return paths;
}

}  // namespace boolrev
