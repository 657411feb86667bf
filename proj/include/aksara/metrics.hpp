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

#ifndef AKSARA_METRICS_HPP_
#define AKSARA_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>

namespace aksara {

struct MetricConfig {
  int char_ngram_max = 6;  // chrF++ character n-gram orders 1..6
  int word_ngram_max = 2;  // chrF++ word n-gram orders 1..2
  double beta = 2.0;       // recall weight in the per-order F score
  int bleu_max_order = 4;

  void validate() const;  // orders >= 1, beta > 0
};

struct ScoreReport {
  double chrf_pp = 0.0;  // [0, 100]
  double bleu = 0.0;     // [0, 100]
  double wer_pct = 0.0;  // >= 0, may exceed 100
  std::size_t segment_count = 0;
};

/// Corpus chrF++: clipped-match precision/recall per n-gram order (characters
/// with whitespace removed, orders 1..char_ngram_max; whitespace words,
/// orders 1..word_ngram_max), F_beta per order, 100 x mean over all orders.
/// Counts aggregate over the corpus before the division.
double chrf_pp(std::span<const std::string> references,
               std::span<const std::string> hypotheses, const MetricConfig& cfg = {});

/// Corpus BLEU in [0,100]: geometric mean of modified n-gram precisions over
/// whitespace tokens, orders 1..bleu_max_order, with brevity penalty
/// exp(min(0, 1 - ref_len/hyp_len)). Zero-count orders floor at 1e-16.
double bleu(std::span<const std::string> references, std::span<const std::string> hypotheses,
            const MetricConfig& cfg = {});

/// Word error rate in percent: 100 x total word-level edit distance over
/// total reference words (micro aggregation). With macro=true, the mean of
/// per-segment rates instead.
double wer(std::span<const std::string> references, std::span<const std::string> hypotheses,
           bool macro = false);

/// All three metrics over one line-aligned corpus pair.
ScoreReport score_corpus(std::span<const std::string> references,
                         std::span<const std::string> hypotheses,
                         const MetricConfig& cfg = {}, bool macro_wer = false);

/// Unit-cost word-level Levenshtein distance between two segments.
std::size_t word_edit_distance(std::string_view reference, std::string_view hypothesis);

}  // namespace aksara

#endif  // AKSARA_METRICS_HPP_
