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

#ifndef AKSARA_TOKENIZER_HPP_
#define AKSARA_TOKENIZER_HPP_

#include <array>
#include <cstdint>
#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aksara/grapheme.hpp"
#include "aksara/translit.hpp"

namespace aksara {

using TokenId = std::int32_t;

/// Word-level token/ID map with four reserved specials at fixed IDs.
class Vocabulary {
 public:
  static constexpr TokenId kPadId = 0;
  static constexpr TokenId kUnknownId = 1;
  static constexpr TokenId kBeginId = 2;
  static constexpr TokenId kEndId = 3;
  static constexpr std::size_t kNumSpecials = 4;

  static const std::array<std::string, kNumSpecials>& default_markers();

  /// Frequency-ordered vocabulary over whitespace-delimited words of
  /// already-canonicalized lines. Words with frequency below min_count are
  /// dropped; ties at equal frequency break lexicographically. Words equal
  /// to a special marker are reserved and never become corpus tokens.
  static Vocabulary build(std::span<const std::string> lines, int min_count,
                          std::string source_script = {});
  static Vocabulary build(std::istream& lines, int min_count, std::string source_script = {});

  /// Line-oriented file: line k holds the token with ID k; the first four
  /// lines are the special marker strings. Duplicate lines are rejected.
  static Vocabulary parse(std::string_view contents, std::string_view source_name);
  static Vocabulary load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// Builds directly from tokens in ID order (markers first). Validates
  /// uniqueness like parse().
  static Vocabulary parse_tokens(std::vector<std::string> tokens_in_id_order,
                                 std::string_view source_name, std::string source_script);

  std::size_t size() const { return id_to_token_.size(); }
  const std::string& source_script() const { return source_script_; }

  /// kUnknownId for out-of-vocabulary tokens.
  TokenId id_of(std::string_view token) const;
  bool contains(std::string_view token) const;

  /// Throws DataError when id is outside [0, size).
  const std::string& token_of(TokenId id) const;

  const std::string& marker(TokenId special_id) const;

  /// Non-special tokens in ID order (frequency rank order).
  std::span<const std::string> corpus_tokens() const;

 private:
  Vocabulary() = default;
  void index_tokens(std::string_view source_name);

  std::vector<std::string> id_to_token_;
  std::unordered_map<std::string_view, TokenId> token_to_id_;  // views into id_to_token_
  std::string source_script_;
};

struct Encoding {
  std::vector<TokenId> ids;
  /// Indices into ids where the unknown token was emitted.
  std::vector<std::size_t> oov_positions;
  /// Whitespace-delimited source words (sentinels excluded).
  std::size_t word_count = 0;
};

/// Latin → aksara → (grapheme validation) → Latin canonicalization, then
/// whitespace-run collapsing and trimming.
std::string canonicalize(std::string_view text, const RuleTable& to_aksara,
                         const ScriptRules& rules, const RuleTable& to_latin);

/// One ID per whitespace-delimited word; unknown words map to kUnknownId and
/// are recorded. With add_sentinels, begin/end wrap the sequence (excluded
/// from word_count and OOV accounting).
Encoding encode(std::string_view text, const Vocabulary& vocab, bool add_sentinels = false);

/// Joins tokens with single spaces; pad is skipped, other specials render as
/// their marker strings. Throws DataError naming the position of an ID that
/// is out of range.
std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab);

/// Whitespace-delimited words (ASCII space, tab, CR, LF, FF, VT).
std::vector<std::string_view> split_words(std::string_view text);

}  // namespace aksara

#endif  // AKSARA_TOKENIZER_HPP_
