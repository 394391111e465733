// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolrev/model.hpp"

namespace boolrev {

/// BoolNet text: optional `targets, factors` header, then `target, expr`
/// lines. Regulators are ordered by first appearance in the expression.
/// Throws Error(kSyntax | kDualRoleRegulator | kDegenerateFunction |
/// kDuplicateTarget | kUndeclaredRegulator).
Model parseBnet(std::string_view text);

/// ASP facts `vertex(v).`, `edge(u,v,1|0).`, `functionOr(v,T).` (T may be a
/// range `1..N`), `functionAnd(v,T,u).` and `constant(v,0|1).` Subsumed
/// terms are dropped and reported through `warnings`.
/// Throws Error(kSyntax | kInconsistentFacts | kDegenerateFunction).
Model parseLpModel(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string formatBnet(const Model& model);
std::string formatLpModel(const Model& model);

/// Text in the model's own source format.
std::string formatModel(const Model& model);

/// Reads a `.bnet` or `.lp` file. Throws Error(kIo) when unreadable.
Model loadModel(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// Throws Error(kIo).
void writeModel(const Model& model, const std::string& path);

/// `dir/stem_<k>ext` for the input path `dir/stem.ext`.
std::string numberedPath(const std::string& path, int k);

}  // namespace boolrev
