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

#ifndef AKSARA_DIAGNOSTICS_HPP_
#define AKSARA_DIAGNOSTICS_HPP_

#include <span>
#include <string>

#include "aksara/tokenizer.hpp"

namespace aksara {

/// Tokenizer statistics over an encoded corpus.
struct TokenizerReport {
  std::string language;
  std::string tokenizer_id;
  double fertility = 0.0;    // tokens per word
  double avg_seq_len = 0.0;  // tokens per example
  double oov_rate = 0.0;     // in [0, 1]
  std::size_t example_count = 0;
};

struct OverlapReport {
  std::size_t shared = 0;
  std::size_t union_size = 0;
  double overlap_pct = 0.0;  // 100 * shared / union_size
};

/// Total tokens (sentinels excluded) over total source words.
/// Throws ValidationError when no words were encoded.
double fertility(std::span<const Encoding> encodings);

/// Mean tokens per example, sentinels excluded. Throws ValidationError on an
/// empty list.
double avg_seq_len(std::span<const Encoding> encodings);

/// Relative sequence-length change in percent: 100 * (other - base) / base.
/// Throws ValidationError when base_len <= 0.
double inflation(double base_len, double other_len);

/// Total OOV positions over total words. Throws ValidationError when no
/// words were encoded.
double oov_rate(std::span<const Encoding> encodings);

/// Overlap of non-special token sets: |A∩B|, |A∪B|, and the percentage.
/// Throws ValidationError when both vocabularies hold no corpus tokens.
OverlapReport vocab_overlap(const Vocabulary& a, const Vocabulary& b);

/// Tokens in an encoding with begin/end sentinels excluded.
std::size_t token_count_excluding_sentinels(const Encoding& encoding);

}  // namespace aksara

#endif  // AKSARA_DIAGNOSTICS_HPP_
