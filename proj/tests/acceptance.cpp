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
//
// Release gate: each check below prints one [PASS]/[FAIL] line and the
// binary exits nonzero if any check fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aksara/diagnostics.hpp"
#include "aksara/grapheme.hpp"
#include "aksara/metrics.hpp"
#include "aksara/pipeline.hpp"
#include "aksara/render.hpp"
#include "aksara/tokenizer.hpp"
#include "aksara/translit.hpp"
#include "aksara/utf8.hpp"
#include "metric_oracle.hpp"

namespace {

namespace fs = std::filesystem;
using namespace aksara;

const std::string kRules = AKSARA_RULES_DIR;

struct CheckError {
  std::string reason;
};

void require(bool ok, const std::string& reason) {
  if (!ok) throw CheckError{reason};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string from_codepoints(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) utf8::append(out, cp);
  return out;
}

void write_text(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw CheckError{"cannot write " + path.string()};
  out << contents;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) throw CheckError{"cannot read " + path.string()};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// 1. Sequence-length inflation arithmetic reproduces the reference figures
//    at one displayed decimal (the published figures truncate toward zero).

std::string check_inflation() {
  struct Row {
    double base, other, printed;
  };
  const Row rows[] = {{45.97, 65.11, 41.6},
                      {39.41, 61.42, 55.8},
                      {130.04, 130.86, 0.6},
                      {3.73, 4.21, 12.8}};
  std::string shown;
  for (const Row& row : rows) {
    double exact = inflation(row.base, row.other);
    double display = std::trunc(exact * 10.0) / 10.0;
    require(std::fabs(display - row.printed) <= 0.05,
            "inflation(" + fmt(row.base) + ", " + fmt(row.other) + ") displays as " +
                fmt(display) + ", expected " + fmt(row.printed));
    if (!shown.empty()) shown += ", ";
    shown += "+" + fmt(display);
  }
  return shown;
}

// ---------------------------------------------------------------------------
// 2. Vocabulary overlap on two synthetic vocabularies sharing 4,994 of a
//    30,346-word union.

std::string check_overlap() {
  std::vector<std::string> lines_a;
  std::vector<std::string> lines_b;
  char buf[16];
  for (int i = 0; i < 4994; ++i) {
    std::snprintf(buf, sizeof buf, "s%05d", i);
    lines_a.emplace_back(buf);
    lines_b.emplace_back(buf);
  }
  for (int i = 0; i < 12676; ++i) {
    std::snprintf(buf, sizeof buf, "a%05d", i);
    lines_a.emplace_back(buf);
    std::snprintf(buf, sizeof buf, "b%05d", i);
    lines_b.emplace_back(buf);
  }
  Vocabulary va = Vocabulary::build(lines_a, 1);
  Vocabulary vb = Vocabulary::build(lines_b, 1);
  OverlapReport report = vocab_overlap(va, vb);
  require(report.shared == 4994, "shared = " + std::to_string(report.shared));
  require(report.union_size == 30346, "union = " + std::to_string(report.union_size));
  require(std::fabs(report.overlap_pct - 16.4) <= 0.1,
          "overlap " + fmt(report.overlap_pct) + "% not within 0.1 of 16.4%");
  return fmt(report.overlap_pct) + "% overlap";
}

// ---------------------------------------------------------------------------
// 3. chrF++/BLEU/WER agree with the brute-force oracles on 200 randomized
//    corpora; WER reproduces the >100% regime.

std::string check_metric_oracles() {
  const std::vector<std::string> pool = {"a",  "b",  "ab",   "ba",     "aab", "abab",
                                         "x",  "yz", "q",    "jawa",   "bali", "aksara",
                                         "na", "ha", "cara", "ka"};
  std::mt19937 rng(12345);
  auto make_segment = [&](std::size_t min_words) {
    std::size_t words = min_words + rng() % (9 - min_words);
    std::string segment;
    for (std::size_t w = 0; w < words; ++w) {
      if (w) segment += ' ';
      segment += pool[rng() % pool.size()];
    }
    return segment;
  };
  double max_diff = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t segments = 1 + rng() % 10;
    std::vector<std::string> refs, hyps;
    for (std::size_t s = 0; s < segments; ++s) {
      refs.push_back(make_segment(1));
      hyps.push_back(make_segment(rng() % 4 == 0 ? 0 : 1));
    }
    double lib_chrf = chrf_pp(refs, hyps);
    double lib_bleu = bleu(refs, hyps);
    double lib_wer = wer(refs, hyps);
    double ora_chrf = oracle::chrf_pp(refs, hyps);
    double ora_bleu = oracle::bleu(refs, hyps);
    double ora_wer = oracle::wer(refs, hyps);
    for (double diff : {std::fabs(lib_chrf - ora_chrf), std::fabs(lib_bleu - ora_bleu),
                        std::fabs(lib_wer - ora_wer)}) {
      max_diff = std::max(max_diff, diff);
    }
    require(std::fabs(lib_chrf - ora_chrf) <= 1e-9,
            "chrF++ diverges from oracle on corpus " + std::to_string(iter) + ": " +
                fmt(lib_chrf) + " vs " + fmt(ora_chrf));
    require(std::fabs(lib_bleu - ora_bleu) <= 1e-9,
            "BLEU diverges from oracle on corpus " + std::to_string(iter) + ": " +
                fmt(lib_bleu) + " vs " + fmt(ora_bleu));
    require(std::fabs(lib_wer - ora_wer) <= 1e-9,
            "WER diverges from oracle on corpus " + std::to_string(iter) + ": " +
                fmt(lib_wer) + " vs " + fmt(ora_wer));
  }
  std::vector<std::string> ref = {"a"};
  std::vector<std::string> hyp = {"b c"};
  double over = wer(ref, hyp);
  require(over == 200.0, "WER(\"a\", \"b c\") = " + fmt(over) + ", expected 200");
  return "200 corpora, max |diff| " + fmt(max_diff) + ", WER over-100 regime ok";
}

// ---------------------------------------------------------------------------
// 4. Round-trip properties: transliteration inversion, encode/decode, and
//    script-aware segmentation tiling.

std::string check_round_trips() {
  std::mt19937 rng(777);

  // (a) A random bijective prefix-free table: every length-2 source over
  // 'a'..'e', each mapped to a distinct scalar target.
  std::vector<TransliterationRule> rules;
  char32_t target = 0xA980;
  for (char c1 = 'a'; c1 <= 'e'; ++c1) {
    for (char c2 = 'a'; c2 <= 'e'; ++c2) {
      rules.push_back({std::string{c1, c2}, utf8::encode(target++)});
    }
  }
  std::shuffle(rules.begin(), rules.end(), rng);
  RuleTable forward("syn", "to_aksara", rules);
  RuleTable backward = invert_table(forward);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string text;
    std::size_t pairs = rng() % 20;
    for (std::size_t i = 0; i < pairs; ++i) {
      text += static_cast<char>('a' + rng() % 5);
      text += static_cast<char>('a' + rng() % 5);
    }
    TransliterationResult there = transliterate(text, forward);
    require(there.unmapped_spans.empty(), "unexpected pass-through in forward direction");
    TransliterationResult back = transliterate(there.output, backward);
    require(back.output == text, "transliteration round trip altered the text");
  }

  // (b) decode(encode(x)) is the identity on OOV-free canonical text.
  const std::vector<std::string> pool = {"aksara", "jawa", "bali",  "sunda", "lampung",
                                         "carita", "kuna", "sastra", "134",   ","};
  std::vector<std::string> corpus;
  for (int i = 0; i < 1000; ++i) {
    std::string line = pool[rng() % pool.size()];
    std::size_t extra = rng() % 7;
    for (std::size_t w = 0; w < extra; ++w) line += " " + pool[rng() % pool.size()];
    corpus.push_back(line);
  }
  Vocabulary vocab = Vocabulary::build(corpus, 1);
  for (const std::string& line : corpus) {
    Encoding enc = encode(line, vocab, false);
    require(enc.oov_positions.empty(), "vocabulary built from the corpus left an OOV");
    require(decode(enc.ids, vocab) == line, "encode/decode round trip altered: " + line);
  }

  // (c) Script-aware segmentation tiles its input, virama joins included.
  ScriptRules script = ScriptRules::load(kRules + "/jav_script.rules");
  const std::vector<char32_t> alphabet = {
      0xA98F, 0xA9A4, 0xA997, 0xA9AE, 0xA9A0, 0xA9C0, 0xA9C0, 0xA9B6, 0xA9BA,
      'a',    'b',    ' ',    '1',    0x0301, 0x1F600};
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<char32_t> cps;
    std::size_t len = rng() % 13;
    for (std::size_t i = 0; i < len; ++i) cps.push_back(alphabet[rng() % alphabet.size()]);
    std::string text = from_codepoints(cps);
    std::vector<GraphemeCluster> clusters = segment_script(text, script);
    std::string joined;
    std::size_t cursor = 0;
    for (const GraphemeCluster& cluster : clusters) {
      require(cluster.begin == cursor, "segmentation left a gap");
      require(cluster.text == text.substr(cluster.begin, cluster.end - cluster.begin),
              "cluster text does not match its span");
      joined += cluster.text;
      cursor = cluster.end;
    }
    require(cursor == text.size(), "segmentation did not cover the text");
    require(joined == text, "cluster concatenation altered the text");
  }
  return "3000 round trips, zero failures";
}

// ---------------------------------------------------------------------------
// 5. Renderer determinism and bounds under the built-in font and default
//    configuration.

bool patches_equal(const PatchSequence& a, const PatchSequence& b) {
  if (a.patches.size() != b.patches.size()) return false;
  if (a.num_text_patches != b.num_text_patches) return false;
  if (a.truncated != b.truncated) return false;
  for (std::size_t i = 0; i < a.patches.size(); ++i) {
    if (a.patches[i].pixels != b.patches[i].pixels) return false;
  }
  return true;
}

std::string check_renderer() {
  RenderConfig config;
  auto backend = open_backend(config);
  RenderConfig roomy = config;
  roomy.max_patches = 4096;

  std::vector<std::string> fixtures = {
      "",
      "hanacaraka",
      "aksara jawa 134 ,",
      "   ",
      from_codepoints({0xA98F, 0xA9C0, 0xA9A4}),
      std::string(3000, 'a'),
      std::string(2730, 'a'),
      std::string(2731, 'a'),
      "!\"#$%&'()*+,-./0123456789:;<=>?@ABCXYZ[\\]^_`abcxyz{|}~",
  };
  std::size_t truncated_seen = 0;
  for (const std::string& text : fixtures) {
    PatchSequence first = render_patches(text, config, *backend);
    PatchSequence second = render_patches(text, config, *backend);
    require(patches_equal(first, second), "re-rendering produced different bytes");
    require(first.patches.size() <= static_cast<std::size_t>(config.max_patches),
            "patch count exceeds the cap");
    PatchSequence unbounded = render_patches(text, roomy, *backend);
    if (first.truncated) {
      ++truncated_seen;
      require(first.patches.size() == static_cast<std::size_t>(config.max_patches),
              "truncated render does not fill the cap");
      require(unbounded.patches.size() > first.patches.size(),
              "truncation flag set although the cap does not bind");
    } else {
      require(unbounded.patches.size() == first.patches.size(),
              "truncation flag clear although the cap binds");
    }
  }
  require(truncated_seen == 2, "expected exactly the two over-cap fixtures to truncate");

  PatchSequence empty = render_patches("", config, *backend);
  require(empty.patches.size() == 1, "empty text must yield exactly one patch");
  require(empty.num_text_patches == 0, "empty text must yield no text patches");
  for (std::uint8_t pixel : empty.patches[0].pixels) {
    require(pixel == config.background, "empty text patch is not all background");
  }
  return std::to_string(fixtures.size()) + " fixtures deterministic within bounds";
}

// ---------------------------------------------------------------------------
// 6. End-to-end dataset builds are byte-identical across runs and worker
//    counts on a 100-line synthetic corpus.

std::string check_build_determinism() {
  std::mt19937 rng(7);
  const std::vector<std::string> pool = {"aksara", "jawa",  "hanacaraka", "carita",
                                         "djarwa", "pada",  "sastra",     "kuna",
                                         "tata",   "lingsa", "134",        ","};
  std::string corpus;
  for (int i = 0; i < 100; ++i) {
    std::size_t words = 1 + rng() % 6;
    for (std::size_t w = 0; w < words; ++w) {
      if (w) corpus += ' ';
      corpus += pool[rng() % pool.size()];
    }
    corpus += '\n';
  }

  fs::path work = fs::temp_directory_path() / "aksara_acceptance_build";
  fs::remove_all(work);
  fs::create_directories(work);
  write_text(work / "corpus.txt", corpus);

  auto make_config = [&](const fs::path& out_dir, int workers) {
    PipelineConfig config;
    config.language = "jav";
    config.to_aksara_rules = kRules + "/jav_to_aksara.rules";
    config.to_latin_rules = kRules + "/jav_to_latin.rules";
    config.script_rules = kRules + "/jav_script.rules";
    config.input_paths = {work / "corpus.txt"};
    config.output_dir = out_dir;
    config.workers = workers;
    return config;
  };

  build_dataset(make_config(work / "run1", 1));
  std::string manifest1 = slurp(work / "run1" / "manifest.jsonl");
  build_dataset(make_config(work / "run1", 1));
  std::string manifest1_again = slurp(work / "run1" / "manifest.jsonl");
  build_dataset(make_config(work / "run4", 4));
  std::string manifest4 = slurp(work / "run4" / "manifest.jsonl");

  require(manifest1 == manifest1_again, "re-running the build changed the manifest");
  require(manifest1 == manifest4, "worker count changed the manifest");
  std::size_t lines = static_cast<std::size_t>(
      std::count(manifest1.begin(), manifest1.end(), '\n'));
  require(lines == 101, "manifest must hold 100 examples plus a summary");
  fs::remove_all(work);
  return "100 examples, identical manifests across reruns and workers 1/4";
}

// ---------------------------------------------------------------------------
// 7. OOV under a corpus's own vocabulary is exactly zero.

std::string check_self_vocab_oov() {
  std::mt19937 rng(99);
  const std::vector<std::string> pool = {"aksara", "jawa", "bali", "sunda",  "lampung",
                                         "carita", "kuna", "tata", "wacana", "kidung"};
  for (int corpus_idx = 0; corpus_idx < 20; ++corpus_idx) {
    std::vector<std::string> lines;
    std::size_t count = 1 + rng() % 50;
    for (std::size_t i = 0; i < count; ++i) {
      std::string line = pool[rng() % pool.size()];
      std::size_t extra = rng() % 6;
      for (std::size_t w = 0; w < extra; ++w) line += " " + pool[rng() % pool.size()];
      lines.push_back(line);
    }
    Vocabulary vocab = Vocabulary::build(lines, 1);
    std::vector<Encoding> encodings;
    for (const std::string& line : lines) encodings.push_back(encode(line, vocab, false));
    double rate = oov_rate(encodings);
    require(rate == 0.0, "self-vocabulary OOV rate " + fmt(rate) + " is not exactly 0");
  }
  return "20 corpora, OOV rate exactly 0";
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* label;
    double budget_seconds;
    std::function<std::string()> body;
  };
  const Entry entries[] = {
      {1, "sequence-length inflation figures", 1.0, check_inflation},
      {2, "vocabulary overlap percentage", 1.0, check_overlap},
      {3, "metric oracle equivalence", 30.0, check_metric_oracles},
      {4, "round-trip properties", 30.0, check_round_trips},
      {5, "renderer determinism and bounds", 10.0, check_renderer},
      {6, "end-to-end build determinism", 60.0, check_build_determinism},
      {7, "self-vocabulary OOV", 10.0, check_self_vocab_oov},
  };
  int failures = 0;
  for (const Entry& entry : entries) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    std::string failure;
    try {
      detail = entry.body();
    } catch (const CheckError& e) {
      failure = e.reason;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && elapsed > entry.budget_seconds) {
      failure = "exceeded " + fmt(entry.budget_seconds) + "s budget";
    }
    if (failure.empty()) {
      std::printf("[PASS] criterion %d: %s (%s; %.2fs)\n", entry.number, entry.label,
                  detail.c_str(), elapsed);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s: %s (%.2fs)\n", entry.number, entry.label,
                  failure.c_str(), elapsed);
    }
  }
  return failures == 0 ? 0 : 1;
}
