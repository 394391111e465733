// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace boolrev {

std::string_view trim(std::string_view text);

/// Splits on `sep`, keeping empty fields.
std::vector<std::string> split(std::string_view text, char sep);

/// Lines without their terminators; accepts LF and CRLF.
std::vector<std::string> splitLines(std::string_view text);

/// Throws Error(kIo).
std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view content);

/// Lower-cased extension including the dot, e.g. ".bnet".
std::string extensionOf(const std::string& path);

}  // namespace boolrev
