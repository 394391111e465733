// SPDX-License-Identifier: Apache-2.0
#include "boolrev/observations_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "boolrev/error.hpp"
#include "boolrev/model.hpp"
#include "boolrev/text_util.hpp"
#include "facts.hpp"

namespace boolrev {
namespace {

std::string lineTag(std::size_t line) { return "line " + std::to_string(line) + ": "; }

int parseTime(std::string_view text, std::size_t line) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const int t = std::stoi(s, &used);
    if (used == s.size() && t >= 0) return t;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kSyntax, lineTag(line) + "invalid time index '" + s + "'");
}

void finish(std::vector<ObservationProfile>& profiles) {
  for (auto& p : profiles) {
    if (p.kind == ObservationKind::kTimeSeries) fillTimeGaps(p);
    if (p.rows.empty()) p.rows.try_emplace(0);
    validateProfile(p);
  }
}

ObservationProfile emptyProfile(const std::string& id, const ObservationBinding& binding) {
  ObservationProfile p;
  p.id = id;
  p.kind = binding.kind;
  p.scheme = binding.scheme;
  return p;
}

}  // namespace

ObservationBinding parseBindingToken(std::string_view token) {
  std::string t(trim(token));
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  constexpr std::string_view kSuffix = "updater";
  if (t.size() > kSuffix.size() && t.compare(t.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0) {
    t.resize(t.size() - kSuffix.size());
  }
  if (t == "steady") return {ObservationKind::kSteady, std::nullopt};
  if (t == "notsteady") return {ObservationKind::kNotSteady, std::nullopt};
  if (t == "sync") return {ObservationKind::kTimeSeries, UpdateScheme::kSynchronous};
  if (t == "async") return {ObservationKind::kTimeSeries, UpdateScheme::kAsynchronous};
  if (t == "complete") return {ObservationKind::kTimeSeries, UpdateScheme::kComplete};
  throw Error(ErrorCode::kUsage, "unknown updater '" + std::string(token) +
                                     "' (expected steady, notsteady, sync, async or complete)");
}

bool isMissingToken(std::string_view cell) {
  cell = trim(cell);
  return cell.empty() || cell == "*" || cell == "N/A" || cell == "NaN" || cell == "-";
}

std::vector<ObservationProfile> parseObservationsCsv(std::string_view text,
                                                     const ObservationBinding& binding,
                                                     const std::vector<std::string>* nodes) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  const auto raw = splitLines(text);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!trim(raw[i]).empty()) lines.emplace_back(i + 1, raw[i]);
  }
  if (lines.empty()) throw Error(ErrorCode::kSyntax, "missing header row");
  const auto header = split(lines[0].second, ',');
  if (!trim(header[0]).empty()) {
    throw Error(ErrorCode::kSyntax, lineTag(lines[0].first) + "first header field must be empty");
  }
  const bool series = header.size() > 1 && trim(header[1]).empty();
  const std::size_t first_column = series ? 2 : 1;
  if (series != (binding.kind == ObservationKind::kTimeSeries)) {
    throw Error(ErrorCode::kSyntax,
                series ? "time-series table needs a sync, async or complete updater"
                       : "steady-state table needs a steady or notsteady updater");
  }
  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (std::size_t c = first_column; c < header.size(); ++c) {
    std::string name(trim(header[c]));
    if (!isValidNodeId(name) ||
        (nodes && std::find(nodes->begin(), nodes->end(), name) == nodes->end())) {
      throw Error(ErrorCode::kUnknownNodeColumn,
                  lineTag(lines[0].first) + "unknown node column '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kSyntax, lineTag(lines[0].first) + "duplicate column '" + name + "'");
    }
    columns.push_back(std::move(name));
  }

  std::vector<ObservationProfile> profiles;
  std::map<std::string, std::size_t> index;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& [line, content] = lines[r];
    const auto fields = split(content, ',');
    if (fields.size() > header.size()) {
      throw Error(ErrorCode::kSyntax, lineTag(line) + "more fields than header columns");
    }
    const std::string id(trim(fields[0]));
    if (id.empty()) throw Error(ErrorCode::kSyntax, lineTag(line) + "missing profile identifier");
    int time = 0;
    if (series) {
      if (fields.size() < 2) throw Error(ErrorCode::kSyntax, lineTag(line) + "missing time index");
      time = parseTime(fields[1], line);
    }
    auto [it, fresh] = index.emplace(id, profiles.size());
    if (fresh) {
      profiles.push_back(emptyProfile(id, binding));
    } else if (!series) {
      throw Error(ErrorCode::kDuplicateProfile, lineTag(line) + "profile '" + id + "' repeated");
    }
    ObservationProfile& profile = profiles[it->second];
    auto [row, inserted] = profile.rows.try_emplace(time);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateProfileTimePair,
                  lineTag(line) + "profile '" + id + "' has time " + std::to_string(time) + " twice");
    }
    for (std::size_t c = first_column; c < fields.size(); ++c) {
      const std::string_view cell = trim(fields[c]);
      if (isMissingToken(cell)) continue;
      if (cell != "0" && cell != "1") {
        throw Error(ErrorCode::kNonBinaryCell,
                    lineTag(line) + "cell '" + std::string(cell) + "' is not 0/1");
      }
      row->second.cells[columns[c - first_column]] = cell == "1";
    }
  }
  finish(profiles);
  return profiles;
}

std::vector<ObservationProfile> parseObservationsLp(std::string_view text,
                                                    const ObservationBinding& binding,
                                                    const std::vector<std::string>* nodes) {
  const auto facts = detail::parseFacts(text);
  std::vector<ObservationProfile> profiles;
  std::map<std::string, std::size_t> index;
  const bool series = binding.kind == ObservationKind::kTimeSeries;
  for (const auto& f : facts) {
    if (f.predicate == "exp") {
      if (f.args.size() != 1) throw Error(ErrorCode::kSyntax, lineTag(f.line) + "exp/1 expected");
      if (!index.emplace(f.args[0], profiles.size()).second) {
        throw Error(ErrorCode::kDuplicateProfile,
                    lineTag(f.line) + "profile '" + f.args[0] + "' declared twice");
      }
      profiles.push_back(emptyProfile(f.args[0], binding));
    } else if (f.predicate == "obs_vlabel") {
      if (f.args.size() != 3 && f.args.size() != 4) {
        throw Error(ErrorCode::kSyntax, lineTag(f.line) + "obs_vlabel/3 or obs_vlabel/4 expected");
      }
      auto it = index.find(f.args[0]);
      if (it == index.end()) {
        throw Error(ErrorCode::kSyntax,
                    lineTag(f.line) + "profile '" + f.args[0] + "' is not declared by exp/1");
      }
      const std::string& node = f.args[1];
      if (!isValidNodeId(node) ||
          (nodes && std::find(nodes->begin(), nodes->end(), node) == nodes->end())) {
        throw Error(ErrorCode::kUnknownNode, lineTag(f.line) + "unknown node '" + node + "'");
      }
      const std::string& value = f.args[2];
      if (value != "0" && value != "1") {
        throw Error(ErrorCode::kValueOutOfRange,
                    lineTag(f.line) + "value '" + value + "' is not 0 or 1");
      }
      int time = 0;
      if (f.args.size() == 4) time = parseTime(f.args[3], f.line);
      if (series && f.args.size() != 4) {
        throw Error(ErrorCode::kSyntax, lineTag(f.line) + "time-series observation needs a time");
      }
      if (!series && time != 0) {
        throw Error(ErrorCode::kSyntax, lineTag(f.line) + "steady observation at time " +
                                            std::to_string(time));
      }
      auto& cells = profiles[it->second].rows[time].cells;
      auto [cell, fresh] = cells.emplace(node, value == "1");
      if (!fresh && cell->second != (value == "1")) {
        throw Error(ErrorCode::kSyntax, lineTag(f.line) + "conflicting values for '" + node + "'");
      }
    } else {
      throw Error(ErrorCode::kSyntax,
                  lineTag(f.line) + "unknown predicate '" + f.predicate + "'");
    }
  }
  finish(profiles);
  return profiles;
}

std::vector<ObservationProfile> loadObservations(const std::string& path,
                                                 const ObservationBinding& binding,
                                                 const std::vector<std::string>* nodes) {
  const std::string ext = extensionOf(path);
  if (ext != ".csv" && ext != ".lp") {
    throw Error(ErrorCode::kSyntax,
                "unsupported observation extension '" + ext + "' (use .csv or .lp)");
  }
  const std::string text = readFile(path);
  return ext == ".lp" ? parseObservationsLp(text, binding, nodes)
                      : parseObservationsCsv(text, binding, nodes);
}

std::string formatObservationsCsv(const std::vector<ObservationProfile>& profiles,
                                  const std::vector<std::string>& columns) {
  const bool series =
      !profiles.empty() && profiles.front().kind == ObservationKind::kTimeSeries;
  std::string out = series ? ",," : ",";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& p : profiles) {
    for (const auto& [time, row] : p.rows) {
      out += p.id;
      if (series) out += ',' + std::to_string(time);
      for (const auto& col : columns) {
        out += ',';
        if (auto v = row.value(col)) out += *v ? '1' : '0';
      }
      out += '\n';
    }
  }
  return out;
}

std::string formatObservationsLp(const std::vector<ObservationProfile>& profiles) {
  using detail::factTerm;
  std::string out;
  for (const auto& p : profiles) {
    out += "exp(" + factTerm(p.id) + ").\n";
    const bool series = p.kind == ObservationKind::kTimeSeries;
    for (const auto& [time, row] : p.rows) {
      for (const auto& [node, value] : row.cells) {
        out += "obs_vlabel(" + factTerm(p.id) + "," + factTerm(node) + "," + (value ? "1" : "0");
        if (series) out += "," + std::to_string(time);
        out += ").\n";
      }
    }
  }
  return out;
}

}  // namespace boolrev
