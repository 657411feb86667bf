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

#include "aksara/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/utf8.hpp"

namespace aksara {

namespace {

constexpr double kPrecisionFloor = 1e-16;

bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::vector<std::string_view> split_view(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space_byte(text[i])) ++i;
    std::size_t begin = i;
    while (i < text.size() && !is_space_byte(text[i])) ++i;
    if (i > begin) words.push_back(text.substr(begin, i - begin));
  }
  return words;
}

std::u32string strip_spaces(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    utf8::Decoded d = utf8::decode(text, i);
    if (!(d.cp <= 0x7F && is_space_byte(static_cast<char>(d.cp)))) out.push_back(d.cp);
    i += static_cast<std::size_t>(d.width);
  }
  return out;
}

// One corpus-level accumulator per n-gram order.
struct OrderCounts {
  std::uint64_t matched = 0;
  std::uint64_t hyp_total = 0;
  std::uint64_t ref_total = 0;
};

using NgramCounts = std::unordered_map<std::u32string, std::uint64_t>;

std::uint64_t count_char_ngrams(const std::u32string& seq, int order, NgramCounts* counts) {
  auto n = static_cast<std::size_t>(order);
  if (seq.size() < n) return 0;
  std::uint64_t total = seq.size() - n + 1;
  for (std::size_t i = 0; i + n <= seq.size(); ++i) ++(*counts)[seq.substr(i, n)];
  return total;
}

// Word n-grams are keyed by joining words with U+0000, which cannot occur in
// a word (words never contain NUL after UTF-8 validation splits on spaces).
std::uint64_t count_word_ngrams(const std::vector<std::u32string>& words, int order,
                                NgramCounts* counts) {
  auto n = static_cast<std::size_t>(order);
  if (words.size() < n) return 0;
  std::uint64_t total = words.size() - n + 1;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    std::u32string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) key.push_back(U'\0');
      key.append(words[i + k]);
    }
    ++(*counts)[key];
  }
  return total;
}

void accumulate_matches(const NgramCounts& ref, const NgramCounts& hyp, OrderCounts* acc) {
  for (const auto& [key, hyp_count] : hyp) {
    auto it = ref.find(key);
    if (it != ref.end()) acc->matched += std::min(hyp_count, it->second);
  }
}

double f_beta(const OrderCounts& acc, double beta) {
  if (acc.hyp_total == 0 || acc.ref_total == 0) return 0.0;
  double precision = static_cast<double>(acc.matched) / static_cast<double>(acc.hyp_total);
  double recall = static_cast<double>(acc.matched) / static_cast<double>(acc.ref_total);
  if (precision + recall == 0.0) return 0.0;
  double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

void require_aligned(std::span<const std::string> references,
                     std::span<const std::string> hypotheses) {
  if (references.size() != hypotheses.size()) {
    throw ValidationError("reference and hypothesis segment counts differ: " +
                          std::to_string(references.size()) + " vs " +
                          std::to_string(hypotheses.size()));
  }
  if (references.empty()) throw ValidationError("cannot score an empty corpus");
}

std::vector<std::u32string> decode_words(std::string_view text) {
  std::vector<std::u32string> out;
  for (std::string_view word : split_view(text)) {
    std::u32string decoded;
    std::size_t i = 0;
    while (i < word.size()) {
      utf8::Decoded d = utf8::decode(word, i);
      decoded.push_back(d.cp);
      i += static_cast<std::size_t>(d.width);
    }
    out.push_back(std::move(decoded));
  }
  return out;
}

}  // namespace

void MetricConfig::validate() const {
  if (char_ngram_max < 1) throw ValidationError("char_ngram_max must be at least 1");
  if (word_ngram_max < 1) throw ValidationError("word_ngram_max must be at least 1");
  if (bleu_max_order < 1) throw ValidationError("bleu_max_order must be at least 1");
  if (!(beta > 0.0)) throw ValidationError("beta must be positive");
}

double chrf_pp(std::span<const std::string> references, std::span<const std::string> hypotheses,
               const MetricConfig& cfg) {
  cfg.validate();
  require_aligned(references, hypotheses);

  int order_count = cfg.char_ngram_max + cfg.word_ngram_max;
  std::vector<OrderCounts> orders(static_cast<std::size_t>(order_count));

  for (std::size_t seg = 0; seg < references.size(); ++seg) {
    std::u32string ref_chars = strip_spaces(references[seg]);
    std::u32string hyp_chars = strip_spaces(hypotheses[seg]);
    std::vector<std::u32string> ref_words = decode_words(references[seg]);
    std::vector<std::u32string> hyp_words = decode_words(hypotheses[seg]);

    for (int n = 1; n <= cfg.char_ngram_max; ++n) {
      OrderCounts& acc = orders[static_cast<std::size_t>(n - 1)];
      NgramCounts ref_counts;
      NgramCounts hyp_counts;
      acc.ref_total += count_char_ngrams(ref_chars, n, &ref_counts);
      acc.hyp_total += count_char_ngrams(hyp_chars, n, &hyp_counts);
      accumulate_matches(ref_counts, hyp_counts, &acc);
    }
    for (int n = 1; n <= cfg.word_ngram_max; ++n) {
      OrderCounts& acc = orders[static_cast<std::size_t>(cfg.char_ngram_max + n - 1)];
      NgramCounts ref_counts;
      NgramCounts hyp_counts;
      acc.ref_total += count_word_ngrams(ref_words, n, &ref_counts);
      acc.hyp_total += count_word_ngrams(hyp_words, n, &hyp_counts);
      accumulate_matches(ref_counts, hyp_counts, &acc);
    }
  }

  double sum = 0.0;
  for (const OrderCounts& acc : orders) sum += f_beta(acc, cfg.beta);
  return 100.0 * sum / static_cast<double>(order_count);
}

double bleu(std::span<const std::string> references, std::span<const std::string> hypotheses,
            const MetricConfig& cfg) {
  cfg.validate();
  require_aligned(references, hypotheses);

  std::vector<OrderCounts> orders(static_cast<std::size_t>(cfg.bleu_max_order));
  std::uint64_t ref_len = 0;
  std::uint64_t hyp_len = 0;

  for (std::size_t seg = 0; seg < references.size(); ++seg) {
    std::vector<std::u32string> ref_words = decode_words(references[seg]);
    std::vector<std::u32string> hyp_words = decode_words(hypotheses[seg]);
    ref_len += ref_words.size();
    hyp_len += hyp_words.size();

    for (int n = 1; n <= cfg.bleu_max_order; ++n) {
      OrderCounts& acc = orders[static_cast<std::size_t>(n - 1)];
      NgramCounts ref_counts;
      NgramCounts hyp_counts;
      acc.ref_total += count_word_ngrams(ref_words, n, &ref_counts);
      acc.hyp_total += count_word_ngrams(hyp_words, n, &hyp_counts);
      accumulate_matches(ref_counts, hyp_counts, &acc);
    }
  }

  if (hyp_len == 0) return 0.0;

  double log_sum = 0.0;
  for (const OrderCounts& acc : orders) {
    double precision = kPrecisionFloor;
    if (acc.hyp_total > 0) {
      precision = std::max(kPrecisionFloor, static_cast<double>(acc.matched) /
                                                static_cast<double>(acc.hyp_total));
    }
    log_sum += std::log(precision);
  }
  double geo_mean = std::exp(log_sum / static_cast<double>(cfg.bleu_max_order));

  double ratio = static_cast<double>(ref_len) / static_cast<double>(hyp_len);
  double brevity = std::exp(std::min(0.0, 1.0 - ratio));
  return 100.0 * brevity * geo_mean;
}

std::size_t word_edit_distance(std::string_view reference, std::string_view hypothesis) {
  std::vector<std::string_view> ref = split_view(reference);
  std::vector<std::string_view> hyp = split_view(hypothesis);

  std::size_t m = hyp.size();
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;

  for (std::size_t i = 1; i <= ref.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t substitute = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitute});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double wer(std::span<const std::string> references, std::span<const std::string> hypotheses,
           bool macro) {
  require_aligned(references, hypotheses);

  if (macro) {
    double sum = 0.0;
    for (std::size_t seg = 0; seg < references.size(); ++seg) {
      std::size_t ref_words = split_view(references[seg]).size();
      if (ref_words == 0) {
        throw ValidationError("segment " + std::to_string(seg + 1) +
                              " has an empty reference; per-segment rate is undefined");
      }
      sum += 100.0 * static_cast<double>(word_edit_distance(references[seg], hypotheses[seg])) /
             static_cast<double>(ref_words);
    }
    return sum / static_cast<double>(references.size());
  }

  std::uint64_t edits = 0;
  std::uint64_t ref_words = 0;
  for (std::size_t seg = 0; seg < references.size(); ++seg) {
    edits += word_edit_distance(references[seg], hypotheses[seg]);
    ref_words += split_view(references[seg]).size();
  }
  if (ref_words == 0) throw ValidationError("corpus has no reference words; rate is undefined");
  return 100.0 * static_cast<double>(edits) / static_cast<double>(ref_words);
}

ScoreReport score_corpus(std::span<const std::string> references,
                         std::span<const std::string> hypotheses, const MetricConfig& cfg,
                         bool macro_wer) {
  ScoreReport report;
  report.chrf_pp = chrf_pp(references, hypotheses, cfg);
  report.bleu = bleu(references, hypotheses, cfg);
  report.wer_pct = wer(references, hypotheses, macro_wer);
  report.segment_count = references.size();
  return report;
}

}  // namespace aksara
