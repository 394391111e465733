// SPDX-License-Identifier: Apache-2.0
#include "boolrev/model_io.hpp"

#include <filesystem>

#include "boolrev/error.hpp"
#include "boolrev/text_util.hpp"

namespace boolrev {

std::string formatModel(const Model& model) {
  return model.format() == ModelFormat::kLp ? formatLpModel(model) : formatBnet(model);
}

Model loadModel(const std::string& path, std::vector<std::string>* warnings) {
  const std::string ext = extensionOf(path);
  if (ext != ".bnet" && ext != ".lp") {
    throw Error(ErrorCode::kSyntax, "unsupported model extension '" + ext + "' (use .bnet or .lp)");
  }
  const std::string text = readFile(path);
  return ext == ".lp" ? parseLpModel(text, warnings) : parseBnet(text);
}

void writeModel(const Model& model, const std::string& path) {
  writeFile(path, formatModel(model));
}

std::string numberedPath(const std::string& path, int k) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path();
  out /= p.stem().string() + "_" + std::to_string(k) + p.extension().string();
  return out.string();
}

}  // namespace boolrev
