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

#ifndef AKSARA_PIPELINE_HPP_
#define AKSARA_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aksara/diagnostics.hpp"
#include "aksara/metrics.hpp"
#include "aksara/render.hpp"
#include "aksara/tokenizer.hpp"

namespace aksara {

struct SplitSpec {
  double train_fraction = 1.0;
  double eval_fraction = 0.0;
  std::uint64_t seed = 0;
};

struct PipelineConfig {
  std::string language;
  std::filesystem::path to_aksara_rules;
  std::filesystem::path to_latin_rules;
  std::filesystem::path script_rules;
  std::filesystem::path vocab_path;  // empty means build from the corpus
  int min_count = 1;
  RenderConfig render;
  std::vector<std::filesystem::path> input_paths;
  std::filesystem::path output_dir;
  std::optional<SplitSpec> split;
  int workers = 1;
  bool lowercase = false;
  bool lenient = false;

  /// Parses the declarative config file (one object; see README for keys).
  static PipelineConfig load(const std::filesystem::path& path);

  /// Checks field ranges and that every referenced input file exists.
  void validate() const;
};

struct PairedExample {
  std::string id;
  std::string latin_text;
  std::string aksara_text;
  std::vector<TokenId> token_ids;
  std::string image_ref;  // relative to the manifest's directory
  std::size_t num_text_patches = 0;
  bool truncated = false;
};

/// Reads every input file in order, yielding trimmed non-empty lines with
/// line endings normalized; optionally ASCII-lowercased.
std::vector<std::string> ingest(std::span<const std::filesystem::path> paths, bool lowercase);

/// Seeded pseudorandom permutation then a contiguous cut: the first
/// round(n * train_fraction) lines form the train half. The same seed always
/// produces the same partition.
std::pair<std::vector<std::string>, std::vector<std::string>> split_corpus(
    std::vector<std::string> lines, const SplitSpec& spec);

/// Runs the full dataset build: canonicalize each line, back-transliterate
/// to aksara, render to a strip image, encode to token IDs; writes one
/// manifest record per example plus the strip image, then a summary record
/// (counts, truncation count, checksum of the manifest body). Returns the
/// manifest path. A failed build removes its partial outputs.
std::filesystem::path build_dataset(const PipelineConfig& config);

/// Canonicalizes and encodes a corpus against each vocabulary, returning one
/// TokenizerReport per vocabulary (tokenizer_id = vocabulary file stem).
std::vector<TokenizerReport> stats_command(const PipelineConfig& config,
                                           std::span<const std::filesystem::path> vocab_paths);

/// Line-aligned reference/hypothesis scoring; when language_tags is
/// nonempty it must be line-aligned too and a per-language breakdown is
/// produced under the returned overall report.
struct LabeledScore {
  std::string label;  // "overall" or a language tag
  ScoreReport report;
};
std::vector<LabeledScore> score_command(const std::filesystem::path& reference_path,
                                        const std::filesystem::path& hypothesis_path,
                                        const std::filesystem::path& language_tags_path = {},
                                        const MetricConfig& cfg = {}, bool macro_wer = false);

}  // namespace aksara

#endif  // AKSARA_PIPELINE_HPP_
