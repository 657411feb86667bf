// Copyright 2026 The Aksarakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aksara/translit.hpp"

#include <algorithm>
#include <set>

#include "aksara/error.hpp"
#include "aksara/grapheme.hpp"
#include "aksara/utf8.hpp"
#include "textfile.hpp"

namespace aksara {

RuleTable::RuleTable(std::string script_id, std::string direction_label,
                     std::vector<TransliterationRule> rules)
    : script_id_(std::move(script_id)),
      direction_label_(std::move(direction_label)),
      rules_(std::move(rules)) {
  std::set<std::size_t, std::greater<>> lengths;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const TransliterationRule& rule = rules_[i];
    if (rule.source.empty()) {
      throw ValidationError("rule table '" + script_id_ + "': rule " + std::to_string(i + 1) +
                            " has an empty source");
    }
    auto [it, inserted] = by_source_.emplace(rule.source, i);
    if (!inserted) {
      throw ValidationError("rule table '" + script_id_ + "': duplicate source '" +
                            rule.source + "'");
    }
    lengths.insert(rule.source.size());
  }
  source_lengths_.assign(lengths.begin(), lengths.end());
}

const TransliterationRule* RuleTable::match_at(std::string_view text, std::size_t pos) const {
  const std::size_t remaining = text.size() - pos;
  for (std::size_t len : source_lengths_) {
    if (len > remaining) continue;
    auto it = by_source_.find(text.substr(pos, len));
    if (it != by_source_.end()) return &rules_[it->second];
  }
  return nullptr;
}

TransliterationResult transliterate(std::string_view text, const RuleTable& table) {
  utf8::validate(text);
  TransliterationResult result;
  result.output.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (const TransliterationRule* rule = table.match_at(text, pos)) {
      result.output += rule->target;
      pos += rule->source.size();
      continue;
    }
    const std::size_t len = first_cluster_length(text, pos);
    result.output.append(text.substr(pos, len));
    if (!result.unmapped_spans.empty() && result.unmapped_spans.back().end == pos) {
      result.unmapped_spans.back().end = pos + len;
    } else {
      result.unmapped_spans.push_back({pos, pos + len});
    }
    pos += len;
  }
  return result;
}

RuleTable invert_table(const RuleTable& table) {
  std::unordered_map<std::string_view, std::size_t> seen;
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < table.rules().size(); ++i) {
    const TransliterationRule& rule = table.rules()[i];
    if (rule.target.empty()) {
      problems.push_back("rule " + std::to_string(i + 1) + " ('" + rule.source +
                         "') has an empty target");
      continue;
    }
    auto [it, inserted] = seen.emplace(rule.target, i);
    if (!inserted) {
      problems.push_back("rules " + std::to_string(it->second + 1) + " ('" +
                         table.rules()[it->second].source + "') and " + std::to_string(i + 1) +
                         " ('" + rule.source + "') share target '" + rule.target + "'");
    }
  }
  if (!problems.empty()) {
    std::string message = "rule table '" + table.script_id() + "' is not invertible: ";
    for (std::size_t i = 0; i < problems.size(); ++i) {
      if (i) message += "; ";
      message += problems[i];
    }
    throw ValidationError(message);
  }

  std::vector<TransliterationRule> inverted;
  inverted.reserve(table.size());
  for (const TransliterationRule& rule : table.rules()) {
    inverted.push_back({rule.target, rule.source});
  }
  return RuleTable(table.script_id(), "inverted:" + table.direction_label(),
                   std::move(inverted));
}

RuleTable RuleTable::parse(std::string_view contents, std::string_view source_name) {
  detail::reject_bom(contents, source_name);
  std::string script_id;
  std::string direction;
  std::vector<TransliterationRule> rules;
  std::unordered_map<std::string, std::size_t> first_line_of;

  detail::for_each_line(contents, [&](std::size_t line_no, std::string_view raw) {
    std::string_view trimmed = detail::trim_ascii(raw);
    if (trimmed.empty() || trimmed.front() == '#') return;
    std::string value;
    if (script_id.empty() && detail::parse_header(trimmed, "script", value)) {
      script_id = value;
      return;
    }
    if (direction.empty() && detail::parse_header(trimmed, "direction", value)) {
      direction = value;
      return;
    }
    const std::size_t tab = raw.find('\t');
    if (tab == std::string_view::npos) {
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": expected `source<TAB>target`");
    }
    std::string source(raw.substr(0, tab));
    std::string target(raw.substr(tab + 1));
    if (source.empty()) {
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": empty rule source");
    }
    auto [it, inserted] = first_line_of.emplace(source, line_no);
    if (!inserted) {
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": duplicate source '" + source + "' (first seen on line " +
                            std::to_string(it->second) + ")");
    }
    rules.push_back({std::move(source), std::move(target)});
  });

  if (script_id.empty()) {
    throw ValidationError(std::string(source_name) + ": missing `script: <id>` header");
  }
  if (direction.empty()) {
    throw ValidationError(std::string(source_name) + ": missing `direction: <label>` header");
  }
  return RuleTable(std::move(script_id), std::move(direction), std::move(rules));
}

RuleTable RuleTable::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path), path.string());
}

}  // namespace aksara
