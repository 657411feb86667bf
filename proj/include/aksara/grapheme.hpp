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

#ifndef AKSARA_GRAPHEME_HPP_
#define AKSARA_GRAPHEME_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace aksara {

/// One user-perceived character unit: a slice of the source string plus its
/// half-open byte range. Views stay valid only as long as the source string.
struct GraphemeCluster {
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct CodepointRange {
  char32_t lo;
  char32_t hi;
  bool contains(char32_t cp) const { return cp >= lo && cp <= hi; }
};

/// Script-specific joining rules layered on top of the base segmenter.
///
/// virama codepoints glue a following consonant into the same cluster, so
/// conjunct stacks (consonant-virama-consonant...) come out as one unit.
/// extra_joiners are absorbed into the preceding cluster unconditionally;
/// they cover custom-font codepoints (e.g. private-use vowel signs) that the
/// base segmentation knows nothing about.
class ScriptRules {
 public:
  ScriptRules(std::string script_id, std::vector<CodepointRange> viramas,
              std::vector<CodepointRange> consonants,
              std::vector<CodepointRange> extra_joiners);

  /// Parses the declarative rule-file format (see docs/file-formats in the
  /// README). Throws ValidationError on syntax or invariant violations.
  static ScriptRules parse(std::string_view contents, std::string_view source_name);
  static ScriptRules load(const std::filesystem::path& path);

  const std::string& script_id() const { return script_id_; }
  bool is_virama(char32_t cp) const { return contains(viramas_, cp); }
  bool is_consonant(char32_t cp) const { return contains(consonants_, cp); }
  bool is_joiner(char32_t cp) const { return contains(joiners_, cp); }

 private:
  static bool contains(const std::vector<CodepointRange>& ranges, char32_t cp);

  std::string script_id_;
  std::vector<CodepointRange> viramas_;
  std::vector<CodepointRange> consonants_;
  std::vector<CodepointRange> joiners_;
};

/// Splits text into extended grapheme clusters (UAX #29, Unicode 14.0).
/// Clusters tile the input: concatenating them reproduces it exactly.
/// Throws DataError at the byte offset of the first malformed sequence.
std::vector<GraphemeCluster> segment_base(std::string_view text);

/// Refines segment_base by merging clusters per the script rules: a cluster
/// ending in a virama joins a following consonant-initial cluster, applied
/// left to right repeatedly, and extra_joiner-initial clusters are absorbed
/// into their predecessor.
std::vector<GraphemeCluster> segment_script(std::string_view text, const ScriptRules& rules);

/// Byte length of the extended grapheme cluster starting at `pos`, treating
/// the text from `pos` on as a fresh sequence.
std::size_t first_cluster_length(std::string_view text, std::size_t pos);

}  // namespace aksara

#endif  // AKSARA_GRAPHEME_HPP_
