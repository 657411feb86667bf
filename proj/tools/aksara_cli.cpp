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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aksara/diagnostics.hpp"
#include "aksara/error.hpp"
#include "aksara/image_io.hpp"
#include "aksara/pipeline.hpp"
#include "aksara/render.hpp"
#include "aksara/tokenizer.hpp"
#include "aksara/translit.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool lenient = false;
};

aksara::PipelineConfig load_config(const GlobalArgs& args) {
  if (args.config_path.empty()) {
    throw aksara::ValidationError("this subcommand needs --config");
  }
  aksara::PipelineConfig config = aksara::PipelineConfig::load(args.config_path);
  if (args.seed) {
    if (!config.split) config.split = aksara::SplitSpec{};
    config.split->seed = *args.seed;
  }
  if (args.lenient) config.lenient = true;
  return config;
}

std::vector<std::string> read_input_lines(const std::string& path) {
  std::vector<fs::path> paths{fs::path(path)};
  return aksara::ingest(paths, false);
}

ordered_json report_json(const aksara::TokenizerReport& r) {
  ordered_json j;
  j["language"] = r.language;
  j["tokenizer_id"] = r.tokenizer_id;
  j["fertility"] = r.fertility;
  j["avg_seq_len"] = r.avg_seq_len;
  j["oov_rate"] = r.oov_rate;
  j["example_count"] = r.example_count;
  return j;
}

ordered_json score_json(const aksara::ScoreReport& r) {
  ordered_json j;
  j["chrf_pp"] = r.chrf_pp;
  j["bleu"] = r.bleu;
  j["wer_pct"] = r.wer_pct;
  j["segment_count"] = r.segment_count;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Script-aware tokenization, transliteration, rendering, and scoring for "
               "Brahmic-script Indonesian languages"};
  app.require_subcommand(1);

  GlobalArgs global;
  app.add_option("--config", global.config_path, "Pipeline configuration file");
  app.add_option("--seed", global.seed, "Override the split seed");
  app.add_flag("--lenient", global.lenient, "Log and skip failing lines instead of aborting");

  // build-dataset
  auto* build = app.add_subcommand("build-dataset", "Build the paired image+token dataset");
  std::string build_output;
  std::vector<std::string> build_inputs;
  int build_workers = 0;
  build->add_option("--output", build_output, "Override output_dir");
  build->add_option("--input", build_inputs, "Override the config's input files");
  build->add_option("--workers", build_workers, "Override worker count");

  // translit
  auto* translit = app.add_subcommand("translit", "Apply a rule table line by line");
  std::string translit_rules;
  std::string translit_input;
  std::string translit_output;
  bool translit_invert = false;
  translit->add_option("--rules", translit_rules, "Rule table file")->required();
  translit->add_flag("--invert", translit_invert, "Invert the table before applying");
  translit->add_option("--input", translit_input, "Input file (default stdin)");
  translit->add_option("--output", translit_output, "Output file (default stdout)");

  // tokenize
  auto* tokenize = app.add_subcommand("tokenize", "Encode lines to token IDs or build a vocabulary");
  std::string tok_vocab;
  std::string tok_build;
  std::string tok_input;
  int tok_min_count = 1;
  bool tok_sentinels = false;
  bool tok_raw = false;
  tokenize->add_option("--vocab", tok_vocab, "Vocabulary file to encode with");
  tokenize->add_option("--build-vocab", tok_build, "Build a vocabulary and save it here");
  tokenize->add_option("--min-count", tok_min_count, "Minimum word frequency when building");
  tokenize->add_option("--input", tok_input, "Corpus file")->required();
  tokenize->add_flag("--sentinels", tok_sentinels, "Wrap encodings in begin/end IDs");
  tokenize->add_flag("--raw", tok_raw, "Skip canonicalization (no --config needed)");

  // render
  auto* render = app.add_subcommand("render", "Render text into a strip image");
  std::string render_text;
  std::string render_input;
  std::string render_output;
  std::string render_patches_path;
  render->add_option("--text", render_text, "Text to render");
  render->add_option("--input", render_input, "File whose lines are rendered (numbered PNGs)");
  render->add_option("--output", render_output, "PNG path (--text) or directory (--input)")
      ->required();
  render->add_option("--patches", render_patches_path, "Also write the raw patch tensor here");

  // stats
  auto* stats = app.add_subcommand("stats", "Tokenizer statistics over a corpus");
  std::vector<std::string> stats_vocabs;
  bool stats_overlap = false;
  stats->add_option("--vocab", stats_vocabs, "Vocabulary file (repeatable)")->required();
  stats->add_flag("--overlap", stats_overlap,
                  "With exactly two vocabularies, also report overlap and inflation");

  // score
  auto* score = app.add_subcommand("score", "chrF++, BLEU, and WER for aligned corpora");
  std::string score_ref;
  std::string score_hyp;
  std::string score_langs;
  bool score_macro = false;
  score->add_option("--reference", score_ref, "Reference file")->required();
  score->add_option("--hypothesis", score_hyp, "Hypothesis file")->required();
  score->add_option("--languages", score_langs, "Line-aligned language tags for a breakdown");
  score->add_flag("--macro-wer", score_macro, "Average per-segment rates instead of corpus counts");

  // split
  auto* split = app.add_subcommand("split", "Deterministic train/eval split of the inputs");
  std::string split_train_out;
  std::string split_eval_out;
  split->add_option("--train-out", split_train_out, "Train lines file (default output_dir/train.txt)");
  split->add_option("--eval-out", split_eval_out, "Eval lines file (default output_dir/eval.txt)");

  // Let --config/--seed/--lenient appear on either side of the subcommand.
  for (CLI::App* sub : {build, translit, tokenize, render, stats, score, split}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (build->parsed()) {
    aksara::PipelineConfig config = load_config(global);
    if (!build_output.empty()) config.output_dir = build_output;
    if (!build_inputs.empty()) {
      config.input_paths.clear();
      for (const std::string& p : build_inputs) config.input_paths.emplace_back(p);
    }
    if (build_workers > 0) config.workers = build_workers;
    fs::path manifest = aksara::build_dataset(config);
    std::cout << manifest.string() << "\n";
    return 0;
  }

  if (translit->parsed()) {
    aksara::RuleTable table = aksara::RuleTable::load(translit_rules);
    if (translit_invert) table = aksara::invert_table(table);
    std::ostream* out = &std::cout;
    std::ofstream file_out;
    if (!translit_output.empty()) {
      file_out.open(translit_output, std::ios::binary);
      if (!file_out) throw aksara::IoError("cannot open for writing: " + translit_output);
      out = &file_out;
    }
    auto emit = [&](const std::string& line) {
      aksara::TransliterationResult r = aksara::transliterate(line, table);
      *out << r.output << "\n";
    };
    if (!translit_input.empty()) {
      for (const std::string& line : read_input_lines(translit_input)) emit(line);
    } else {
      std::string line;
      while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        emit(line);
      }
    }
    return 0;
  }

  if (tokenize->parsed()) {
    std::vector<std::string> lines = read_input_lines(tok_input);
    if (!tok_raw) {
      aksara::PipelineConfig config = load_config(global);
      aksara::RuleTable to_aksara = aksara::RuleTable::load(config.to_aksara_rules);
      aksara::RuleTable to_latin = aksara::RuleTable::load(config.to_latin_rules);
      aksara::ScriptRules script = aksara::ScriptRules::load(config.script_rules);
      for (std::string& line : lines) {
        line = aksara::canonicalize(line, to_aksara, script, to_latin);
      }
    }
    if (!tok_build.empty()) {
      aksara::Vocabulary vocab = aksara::Vocabulary::build(lines, tok_min_count);
      vocab.save(tok_build);
      std::cout << vocab.size() << " tokens\n";
      return 0;
    }
    if (tok_vocab.empty()) {
      throw aksara::ValidationError("tokenize needs --vocab or --build-vocab");
    }
    aksara::Vocabulary vocab = aksara::Vocabulary::load(tok_vocab);
    for (const std::string& line : lines) {
      aksara::Encoding enc = aksara::encode(line, vocab, tok_sentinels);
      for (std::size_t i = 0; i < enc.ids.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << enc.ids[i];
      }
      std::cout << "\n";
    }
    return 0;
  }

  if (render->parsed()) {
    aksara::PipelineConfig config = load_config(global);
    std::unique_ptr<aksara::GlyphBackend> backend = aksara::open_backend(config.render);
    if (render_text.empty() == render_input.empty()) {
      throw aksara::ValidationError("render needs exactly one of --text or --input");
    }
    if (!render_text.empty()) {
      aksara::RenderResult r = aksara::render_strip(render_text, config.render, *backend);
      aksara::PatchSequence patches =
          aksara::patchify(r.strip, config.render, render_text, r.truncated);
      aksara::write_png(render_output, r.strip);
      if (!render_patches_path.empty()) {
        aksara::write_patch_tensor(render_patches_path, patches, config.render.patch_side);
      }
      ordered_json j;
      j["image"] = render_output;
      j["patches"] = patches.patches.size();
      j["num_text_patches"] = patches.num_text_patches;
      j["truncated"] = patches.truncated;
      std::cout << j.dump() << "\n";
      return 0;
    }
    fs::create_directories(render_output);
    std::vector<std::string> lines = read_input_lines(render_input);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      char name[16];
      std::snprintf(name, sizeof name, "%06zu.png", i + 1);
      aksara::RenderResult r = aksara::render_strip(lines[i], config.render, *backend);
      aksara::write_png((fs::path(render_output) / name).string(), r.strip);
    }
    std::cout << lines.size() << " strips\n";
    return 0;
  }

  if (stats->parsed()) {
    aksara::PipelineConfig config = load_config(global);
    std::vector<fs::path> vocab_paths(stats_vocabs.begin(), stats_vocabs.end());
    std::vector<aksara::TokenizerReport> reports = aksara::stats_command(config, vocab_paths);
    for (const aksara::TokenizerReport& r : reports) std::cout << report_json(r).dump() << "\n";
    if (stats_overlap) {
      if (vocab_paths.size() != 2) {
        throw aksara::ValidationError("--overlap needs exactly two vocabularies");
      }
      aksara::Vocabulary a = aksara::Vocabulary::load(vocab_paths[0]);
      aksara::Vocabulary b = aksara::Vocabulary::load(vocab_paths[1]);
      aksara::OverlapReport overlap = aksara::vocab_overlap(a, b);
      ordered_json j;
      j["shared"] = overlap.shared;
      j["union_size"] = overlap.union_size;
      j["overlap_pct"] = overlap.overlap_pct;
      j["inflation_pct"] = aksara::inflation(reports[0].avg_seq_len, reports[1].avg_seq_len);
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (score->parsed()) {
    std::vector<aksara::LabeledScore> scored =
        aksara::score_command(score_ref, score_hyp, score_langs, {}, score_macro);
    for (const aksara::LabeledScore& labeled : scored) {
      ordered_json j;
      j["label"] = labeled.label;
      j["scores"] = score_json(labeled.report);
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (split->parsed()) {
    aksara::PipelineConfig config = load_config(global);
    if (!config.split) {
      throw aksara::ValidationError("config has no split section and no --seed was given");
    }
    if (config.input_paths.empty()) throw aksara::ValidationError("config lists no inputs");
    if (config.output_dir.empty() && (split_train_out.empty() || split_eval_out.empty())) {
      throw aksara::ValidationError("give output_dir in the config or both --train-out/--eval-out");
    }
    std::vector<std::string> lines = aksara::ingest(config.input_paths, config.lowercase);
    auto [train, eval] = aksara::split_corpus(std::move(lines), *config.split);

    fs::path train_path = split_train_out.empty() ? config.output_dir / "train.txt"
                                                  : fs::path(split_train_out);
    fs::path eval_path = split_eval_out.empty() ? config.output_dir / "eval.txt"
                                                : fs::path(split_eval_out);
    if (!train_path.parent_path().empty()) fs::create_directories(train_path.parent_path());
    if (!eval_path.parent_path().empty()) fs::create_directories(eval_path.parent_path());
    std::ofstream train_out(train_path, std::ios::binary);
    std::ofstream eval_out(eval_path, std::ios::binary);
    if (!train_out || !eval_out) throw aksara::IoError("cannot open split outputs for writing");
    for (const std::string& line : train) train_out << line << "\n";
    for (const std::string& line : eval) eval_out << line << "\n";

    ordered_json j;
    j["train"] = train.size();
    j["eval"] = eval.size();
    j["train_path"] = train_path.string();
    j["eval_path"] = eval_path.string();
    std::cout << j.dump() << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const aksara::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const aksara::DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
