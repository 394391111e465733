// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace boolrev::detail {

/// A ground ASP fact `predicate(arg, ...).`; quoted arguments are unquoted.
struct Fact {
  std::string predicate;
  std::vector<std::string> args;
  std::size_t line = 0;
};

/// Throws Error(kSyntax). `%` starts a comment.
std::vector<Fact> parseFacts(std::string_view text);

/// Quotes identifiers that would read as ASP variables.
std::string factTerm(const std::string& name);

}  // namespace boolrev::detail
