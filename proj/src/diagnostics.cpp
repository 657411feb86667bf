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

#include "aksara/diagnostics.hpp"

#include <unordered_set>

#include "aksara/error.hpp"

namespace aksara {

std::size_t token_count_excluding_sentinels(const Encoding& encoding) {
  std::size_t count = encoding.ids.size();
  if (!encoding.ids.empty() && encoding.ids.front() == Vocabulary::kBeginId) --count;
  if (!encoding.ids.empty() && encoding.ids.back() == Vocabulary::kEndId) --count;
  return count;
}

double fertility(std::span<const Encoding> encodings) {
  std::uint64_t tokens = 0;
  std::uint64_t words = 0;
  for (const Encoding& e : encodings) {
    tokens += token_count_excluding_sentinels(e);
    words += e.word_count;
  }
  if (words == 0) throw ValidationError("fertility: corpus has no words");
  return static_cast<double>(tokens) / static_cast<double>(words);
}

double avg_seq_len(std::span<const Encoding> encodings) {
  if (encodings.empty()) throw ValidationError("avg_seq_len: no encodings");
  std::uint64_t tokens = 0;
  for (const Encoding& e : encodings) tokens += token_count_excluding_sentinels(e);
  return static_cast<double>(tokens) / static_cast<double>(encodings.size());
}

double inflation(double base_len, double other_len) {
  if (!(base_len > 0.0)) throw ValidationError("inflation: base length must be positive");
  return 100.0 * (other_len - base_len) / base_len;
}

double oov_rate(std::span<const Encoding> encodings) {
  std::uint64_t oov = 0;
  std::uint64_t words = 0;
  for (const Encoding& e : encodings) {
    oov += e.oov_positions.size();
    words += e.word_count;
  }
  if (words == 0) throw ValidationError("oov_rate: corpus has no words");
  return static_cast<double>(oov) / static_cast<double>(words);
}

OverlapReport vocab_overlap(const Vocabulary& a, const Vocabulary& b) {
  std::unordered_set<std::string_view> tokens_a;
  for (const std::string& token : a.corpus_tokens()) tokens_a.insert(token);

  std::size_t shared = 0;
  std::size_t only_b = 0;
  std::unordered_set<std::string_view> seen_b;
  for (const std::string& token : b.corpus_tokens()) {
    if (!seen_b.insert(token).second) continue;
    if (tokens_a.count(token))
      ++shared;
    else
      ++only_b;
  }
  const std::size_t union_size = tokens_a.size() + only_b;
  if (union_size == 0) {
    throw ValidationError("vocab_overlap: both vocabularies are empty of corpus tokens");
  }
  OverlapReport report;
  report.shared = shared;
  report.union_size = union_size;
  report.overlap_pct = 100.0 * static_cast<double>(shared) / static_cast<double>(union_size);
  return report;
}

}  // namespace aksara
