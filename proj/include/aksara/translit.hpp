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

#ifndef AKSARA_TRANSLIT_HPP_
#define AKSARA_TRANSLIT_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aksara {

struct TransliterationRule {
  std::string source;
  std::string target;
};

struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

struct TransliterationResult {
  std::string output;
  /// Input spans copied through unchanged, sorted and disjoint (adjacent
  /// pass-through clusters coalesce into one span).
  std::vector<ByteRange> unmapped_spans;
};

/// An ordered transliteration rule table with longest-match semantics.
/// Source strings are unique and non-empty; matching is greedy left-to-right
/// on bytes of valid UTF-8, so rule order never affects the output.
class RuleTable {
 public:
  RuleTable(std::string script_id, std::string direction_label,
            std::vector<TransliterationRule> rules);

  /// Parses the tab-separated rule-file format. Requires `script:` and
  /// `direction:` headers; rejects byte-order marks, empty sources, and
  /// duplicate sources (naming the offending line).
  static RuleTable parse(std::string_view contents, std::string_view source_name);
  static RuleTable load(const std::filesystem::path& path);

  const std::string& script_id() const { return script_id_; }
  const std::string& direction_label() const { return direction_label_; }
  const std::vector<TransliterationRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  /// Longest source match at text[pos..]; returns nullptr when nothing
  /// matches there.
  const TransliterationRule* match_at(std::string_view text, std::size_t pos) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view sv) const {
      return std::hash<std::string_view>{}(sv);
    }
  };

  std::string script_id_;
  std::string direction_label_;
  std::vector<TransliterationRule> rules_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>> by_source_;
  std::vector<std::size_t> source_lengths_;  // distinct byte lengths, descending
};

/// Greedy longest-match transliteration. Unmatched input passes through one
/// grapheme cluster at a time and is recorded in unmapped_spans; this never
/// fails on valid text.
TransliterationResult transliterate(std::string_view text, const RuleTable& table);

/// Swaps (source, target) per rule, preserving order. Requires unique,
/// non-empty targets; throws ValidationError listing the colliding rules.
RuleTable invert_table(const RuleTable& table);

}  // namespace aksara

#endif  // AKSARA_TRANSLIT_HPP_
