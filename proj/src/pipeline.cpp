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

#include "aksara/pipeline.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "aksara/error.hpp"
#include "aksara/image_io.hpp"
#include "aksara/translit.hpp"
#include "json.hpp"
#include "textfile.hpp"

namespace aksara {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const nlohmann::json& object, std::string_view where,
                         std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ValidationError("config: unknown key \"" + key + "\" in " + std::string(where));
    }
  }
}

fs::path rebase(const fs::path& base, const std::string& p) {
  fs::path candidate(p);
  if (candidate.is_absolute()) return candidate;
  return base / candidate;
}

std::string ascii_lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

void require_file(const fs::path& path, std::string_view role) {
  if (path.empty()) {
    throw ValidationError("config is missing a path for " + std::string(role));
  }
  if (!fs::exists(path)) {
    throw ValidationError(std::string(role) + " does not exist: " + path.string());
  }
}

std::string crc32_hex(const std::string& bytes) {
  std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", crc);
  return buf;
}

std::vector<std::string> read_lines_verbatim(const fs::path& path) {
  std::vector<std::string> lines;
  std::string contents = detail::read_file(path.string());
  detail::for_each_line(contents, [&](std::size_t, std::string_view line) {
    lines.emplace_back(line);
  });
  return lines;
}

struct LoadedAssets {
  RuleTable to_aksara;
  RuleTable to_latin;
  ScriptRules script;
};

LoadedAssets load_assets(const PipelineConfig& config) {
  require_file(config.to_aksara_rules, "rules.to_aksara");
  require_file(config.to_latin_rules, "rules.to_latin");
  require_file(config.script_rules, "rules.script");
  return LoadedAssets{RuleTable::load(config.to_aksara_rules),
                      RuleTable::load(config.to_latin_rules),
                      ScriptRules::load(config.script_rules)};
}

[[noreturn]] void rethrow_tagged(std::size_t line_no, std::string_view stage) {
  try {
    throw;
  } catch (const DataError& e) {
    throw DataError("input line " + std::to_string(line_no) + ", stage " + std::string(stage) +
                    ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError("input line " + std::to_string(line_no) + ", stage " +
                          std::string(stage) + ": " + e.what());
  }
}

ordered_json example_record(const PairedExample& example) {
  ordered_json j;
  j["id"] = example.id;
  j["latin_text"] = example.latin_text;
  j["aksara_text"] = example.aksara_text;
  j["token_ids"] = example.token_ids;
  j["image_ref"] = example.image_ref;
  j["num_text_patches"] = example.num_text_patches;
  j["truncated"] = example.truncated;
  return j;
}

}  // namespace

PipelineConfig PipelineConfig::load(const fs::path& path) {
  std::string contents = detail::read_file(path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config " + path.string() + ": not an object");

  fs::path base = path.parent_path();
  PipelineConfig config;
  try {
    reject_unknown_keys(j, "top level",
                        {"language", "rules", "vocab", "render", "inputs", "output_dir", "split",
                         "workers", "lowercase"});
    config.language = j.value("language", std::string{});
    if (j.contains("rules")) {
      const auto& rules = j.at("rules");
      reject_unknown_keys(rules, "rules", {"to_aksara", "to_latin", "script"});
      if (rules.contains("to_aksara")) {
        config.to_aksara_rules = rebase(base, rules.at("to_aksara").get<std::string>());
      }
      if (rules.contains("to_latin")) {
        config.to_latin_rules = rebase(base, rules.at("to_latin").get<std::string>());
      }
      if (rules.contains("script")) {
        config.script_rules = rebase(base, rules.at("script").get<std::string>());
      }
    }
    if (j.contains("vocab")) {
      const auto& vocab = j.at("vocab");
      reject_unknown_keys(vocab, "vocab", {"path", "min_count"});
      if (vocab.contains("path")) {
        config.vocab_path = rebase(base, vocab.at("path").get<std::string>());
      }
      config.min_count = vocab.value("min_count", 1);
    }
    if (j.contains("render")) {
      const auto& render = j.at("render");
      reject_unknown_keys(render, "render",
                          {"dpi", "font_size", "font_asset", "background", "foreground",
                           "padding_px", "patch_side", "max_patches"});
      config.render.dpi = render.value("dpi", config.render.dpi);
      config.render.font_size = render.value("font_size", config.render.font_size);
      if (render.contains("font_asset")) {
        std::string asset = render.at("font_asset").get<std::string>();
        config.render.font_asset =
            asset.rfind("builtin:", 0) == 0 ? asset : rebase(base, asset).string();
      }
      config.render.background =
          static_cast<std::uint8_t>(render.value("background", static_cast<int>(config.render.background)));
      config.render.foreground =
          static_cast<std::uint8_t>(render.value("foreground", static_cast<int>(config.render.foreground)));
      config.render.padding_px = render.value("padding_px", config.render.padding_px);
      config.render.patch_side = render.value("patch_side", config.render.patch_side);
      config.render.max_patches = render.value("max_patches", config.render.max_patches);
    }
    if (j.contains("inputs")) {
      for (const auto& input : j.at("inputs")) {
        config.input_paths.push_back(rebase(base, input.get<std::string>()));
      }
    }
    if (j.contains("output_dir")) {
      config.output_dir = rebase(base, j.at("output_dir").get<std::string>());
    }
    if (j.contains("split")) {
      const auto& split = j.at("split");
      reject_unknown_keys(split, "split", {"train_fraction", "eval_fraction", "seed"});
      SplitSpec spec;
      spec.train_fraction = split.value("train_fraction", 1.0);
      spec.eval_fraction = split.value("eval_fraction", 0.0);
      spec.seed = split.value("seed", std::uint64_t{0});
      config.split = spec;
    }
    config.workers = j.value("workers", 1);
    config.lowercase = j.value("lowercase", false);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config " + path.string() + ": " + e.what());
  }
  return config;
}

void PipelineConfig::validate() const {
  if (workers < 1) throw ValidationError("workers must be at least 1");
  if (min_count < 1) throw ValidationError("vocab.min_count must be at least 1");
  render.validate();
  for (const fs::path& input : input_paths) {
    if (!fs::exists(input)) throw ValidationError("input does not exist: " + input.string());
  }
  if (!vocab_path.empty() && !fs::exists(vocab_path)) {
    throw ValidationError("vocabulary does not exist: " + vocab_path.string());
  }
  if (split) {
    if (!(split->train_fraction >= 0.0) || !(split->eval_fraction >= 0.0) ||
        split->train_fraction > 1.0 || split->eval_fraction > 1.0) {
      throw ValidationError("split fractions must lie in [0, 1]");
    }
    if (std::abs(split->train_fraction + split->eval_fraction - 1.0) > 1e-9) {
      throw ValidationError("split fractions must sum to 1");
    }
  }
}

std::vector<std::string> ingest(std::span<const fs::path> paths, bool lowercase) {
  std::vector<std::string> lines;
  for (const fs::path& path : paths) {
    std::string contents = detail::read_file(path.string());
    detail::for_each_line(contents, [&](std::size_t, std::string_view line) {
      std::string_view trimmed = detail::trim_ascii(line);
      if (trimmed.empty()) return;
      std::string out(trimmed);
      if (lowercase) out = ascii_lower(std::move(out));
      lines.push_back(std::move(out));
    });
  }
  return lines;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_corpus(
    std::vector<std::string> lines, const SplitSpec& spec) {
  if (!(spec.train_fraction >= 0.0) || !(spec.eval_fraction >= 0.0) ||
      spec.train_fraction > 1.0 || spec.eval_fraction > 1.0 ||
      std::abs(spec.train_fraction + spec.eval_fraction - 1.0) > 1e-9) {
    throw ValidationError("split fractions must lie in [0, 1] and sum to 1");
  }
  std::size_t n = lines.size();
  if (spec.train_fraction > 0.0 && spec.eval_fraction > 0.0 && n < 2) {
    throw ValidationError("cannot split " + std::to_string(n) +
                          " line(s) into two nonempty parts");
  }

  // Hand-rolled Fisher-Yates over a fully specified generator: std::shuffle
  // and uniform_int_distribution are implementation-defined, which would
  // break the same-seed-same-split guarantee across standard libraries.
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(lines[i], lines[j]);
  }

  auto train_count = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) * spec.train_fraction));
  train_count = std::min(train_count, n);

  std::vector<std::string> train(lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(train_count));
  std::vector<std::string> eval(lines.begin() + static_cast<std::ptrdiff_t>(train_count), lines.end());
  return {std::move(train), std::move(eval)};
}

std::filesystem::path build_dataset(const PipelineConfig& config) {
  config.validate();
  if (config.output_dir.empty()) throw ValidationError("config is missing output_dir");
  if (config.input_paths.empty()) throw ValidationError("config lists no inputs");

  LoadedAssets assets = load_assets(config);
  std::unique_ptr<GlyphBackend> backend = open_backend(config.render);

  std::vector<std::string> lines = ingest(config.input_paths, config.lowercase);
  std::size_t n = lines.size();

  // Stage 1: canonicalize everything first; the vocabulary may be built
  // from the canonicalized corpus.
  std::vector<std::optional<std::string>> canonical(n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      canonical[i] = canonicalize(lines[i], assets.to_aksara, assets.script, assets.to_latin);
    } catch (const Error&) {
      try {
        rethrow_tagged(i + 1, "canonicalize");
      } catch (const Error& tagged) {
        if (!config.lenient) throw;
        std::fprintf(stderr, "skip: %s\n", tagged.what());
      }
    }
  }

  Vocabulary vocab = [&] {
    if (!config.vocab_path.empty()) return Vocabulary::load(config.vocab_path);
    std::vector<std::string> kept;
    kept.reserve(n);
    for (const auto& c : canonical) {
      if (c) kept.push_back(*c);
    }
    return Vocabulary::build(kept, config.min_count, assets.script.script_id());
  }();

  // Stage 2: per-line aksara text, strip image, token IDs. Lines may be
  // processed by several workers; records land at their input index so the
  // manifest order never depends on scheduling.
  struct LineResult {
    PairedExample example;
    std::string png_bytes;
  };
  std::vector<std::optional<LineResult>> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto process_one = [&](std::size_t i) {
    if (!canonical[i]) return;  // lenient skip from stage 1
    const std::string& canon = *canonical[i];
    std::string stage = "transliterate";
    try {
      TransliterationResult to_native = transliterate(canon, assets.to_aksara);
      stage = "render";
      RenderResult rendered = render_strip(to_native.output, config.render, *backend);
      PatchSequence patches =
          patchify(rendered.strip, config.render, to_native.output, rendered.truncated);
      stage = "encode";
      Encoding encoding = encode(canon, vocab, false);

      LineResult result;
      char name[16];
      std::snprintf(name, sizeof name, "%06zu", i + 1);
      result.example.id = config.language.empty() ? std::string(name)
                                                  : config.language + "-" + name;
      result.example.latin_text = canon;
      result.example.aksara_text = to_native.output;
      result.example.token_ids = std::move(encoding.ids);
      result.example.image_ref = std::string("images/") + name + ".png";
      result.example.num_text_patches = patches.num_text_patches;
      result.example.truncated = rendered.truncated;
      result.png_bytes = encode_png(rendered.strip);
      results[i] = std::move(result);
    } catch (const Error&) {
      if (config.lenient) {
        try {
          rethrow_tagged(i + 1, stage);
        } catch (const Error& tagged) {
          std::fprintf(stderr, "skip: %s\n", tagged.what());
        }
        return;
      }
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) {
        try {
          rethrow_tagged(i + 1, stage);
        } catch (...) {
          failure = std::current_exception();
        }
      }
    }
  };

  int workers = std::min<int>(config.workers, static_cast<int>(std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n && !failure; ++i) process_one(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (failure) break;
          }
          process_one(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Stage 3: write images and manifest under a temporary root, then swap
  // into place so a failed build never leaves a partial manifest.
  fs::path tmp_root = config.output_dir / ".build.tmp";
  std::error_code ec;
  fs::remove_all(tmp_root, ec);
  try {
    fs::create_directories(tmp_root / "images");
  } catch (const fs::filesystem_error& e) {
    throw IoError(std::string("cannot create output directory: ") + e.what());
  }

  try {
    std::string body;
    std::size_t example_count = 0;
    std::size_t truncated_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!results[i]) continue;
      const LineResult& r = *results[i];
      detail::write_file((tmp_root / r.example.image_ref).string(), r.png_bytes);
      body += example_record(r.example).dump();
      body += '\n';
      ++example_count;
      if (r.example.truncated) ++truncated_count;
    }

    ordered_json summary;
    summary["example_count"] = example_count;
    summary["truncated_count"] = truncated_count;
    summary["checksum"] = crc32_hex(body);
    body += summary.dump();
    body += '\n';
    detail::write_file((tmp_root / "manifest.jsonl").string(), body);

    fs::remove_all(config.output_dir / "images");
    fs::remove(config.output_dir / "manifest.jsonl");
    fs::rename(tmp_root / "images", config.output_dir / "images");
    fs::rename(tmp_root / "manifest.jsonl", config.output_dir / "manifest.jsonl");
    fs::remove_all(tmp_root);
  } catch (...) {
    fs::remove_all(tmp_root, ec);
    throw;
  }
  return config.output_dir / "manifest.jsonl";
}

std::vector<TokenizerReport> stats_command(const PipelineConfig& config,
                                           std::span<const fs::path> vocab_paths) {
  config.validate();
  if (config.input_paths.empty()) throw ValidationError("config lists no inputs");
  if (vocab_paths.empty()) throw ValidationError("stats needs at least one vocabulary");

  LoadedAssets assets = load_assets(config);
  std::vector<std::string> lines = ingest(config.input_paths, config.lowercase);

  std::vector<std::string> canonical;
  canonical.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      canonical.push_back(
          canonicalize(lines[i], assets.to_aksara, assets.script, assets.to_latin));
    } catch (const Error&) {
      rethrow_tagged(i + 1, "canonicalize");
    }
  }

  std::vector<TokenizerReport> reports;
  for (const fs::path& vocab_path : vocab_paths) {
    Vocabulary vocab = Vocabulary::load(vocab_path);
    std::vector<Encoding> encodings;
    encodings.reserve(canonical.size());
    for (const std::string& line : canonical) encodings.push_back(encode(line, vocab, false));

    TokenizerReport report;
    report.language = config.language;
    report.tokenizer_id = vocab_path.stem().string();
    report.fertility = fertility(encodings);
    report.avg_seq_len = avg_seq_len(encodings);
    report.oov_rate = oov_rate(encodings);
    report.example_count = encodings.size();
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<LabeledScore> score_command(const fs::path& reference_path,
                                        const fs::path& hypothesis_path,
                                        const fs::path& language_tags_path,
                                        const MetricConfig& cfg, bool macro_wer) {
  std::vector<std::string> references = read_lines_verbatim(reference_path);
  std::vector<std::string> hypotheses = read_lines_verbatim(hypothesis_path);
  if (references.size() != hypotheses.size()) {
    throw ValidationError("reference and hypothesis line counts differ: " +
                          std::to_string(references.size()) + " vs " +
                          std::to_string(hypotheses.size()));
  }

  std::vector<LabeledScore> out;
  out.push_back({"overall", score_corpus(references, hypotheses, cfg, macro_wer)});

  if (!language_tags_path.empty()) {
    std::vector<std::string> tags = read_lines_verbatim(language_tags_path);
    if (tags.size() != references.size()) {
      throw ValidationError("language tag count " + std::to_string(tags.size()) +
                            " does not match segment count " +
                            std::to_string(references.size()));
    }
    std::map<std::string, std::vector<std::size_t>> by_tag;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      by_tag[std::string(detail::trim_ascii(tags[i]))].push_back(i);
    }
    for (const auto& [tag, indices] : by_tag) {
      std::vector<std::string> refs;
      std::vector<std::string> hyps;
      refs.reserve(indices.size());
      hyps.reserve(indices.size());
      for (std::size_t i : indices) {
        refs.push_back(references[i]);
        hyps.push_back(hypotheses[i]);
      }
      out.push_back({tag, score_corpus(refs, hyps, cfg, macro_wer)});
    }
  }
  return out;
}

}  // namespace aksara
