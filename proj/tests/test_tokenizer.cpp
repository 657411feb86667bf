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

#include "aksara/tokenizer.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "doctest.h"

namespace aksara {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> lines(std::initializer_list<const char*> items) {
  return std::vector<std::string>(items.begin(), items.end());
}

TEST_CASE("specials occupy fixed identifiers") {
  Vocabulary vocab = Vocabulary::build(lines({}), 1);
  CHECK(vocab.size() == Vocabulary::kNumSpecials);
  CHECK(vocab.marker(Vocabulary::kPadId) == "<pad>");
  CHECK(vocab.marker(Vocabulary::kUnknownId) == "<unk>");
  CHECK(vocab.marker(Vocabulary::kBeginId) == "<s>");
  CHECK(vocab.marker(Vocabulary::kEndId) == "</s>");
  CHECK(vocab.corpus_tokens().empty());
}

TEST_CASE("build orders by frequency then lexicographically") {
  Vocabulary vocab = Vocabulary::build(lines({"a b", "a"}), 1);
  CHECK(vocab.size() == 6);
  CHECK(vocab.id_of("a") == 4);
  CHECK(vocab.id_of("b") == 5);

  Vocabulary pruned = Vocabulary::build(lines({"a b", "a"}), 2);
  CHECK(pruned.size() == 5);
  CHECK(pruned.id_of("a") == 4);
  CHECK(pruned.id_of("b") == Vocabulary::kUnknownId);

  Vocabulary ties = Vocabulary::build(lines({"x y", "y x"}), 1);
  CHECK(ties.id_of("x") == 4);
  CHECK(ties.id_of("y") == 5);
}

TEST_CASE("build from a stream matches build from lines") {
  std::istringstream in("a b\na\n");
  Vocabulary from_stream = Vocabulary::build(in, 1);
  Vocabulary from_lines = Vocabulary::build(lines({"a b", "a"}), 1);
  REQUIRE(from_stream.size() == from_lines.size());
  for (std::size_t id = 0; id < from_stream.size(); ++id) {
    CHECK(from_stream.token_of(static_cast<TokenId>(id)) ==
          from_lines.token_of(static_cast<TokenId>(id)));
  }
}

TEST_CASE("identifier compactness and inverse lookups") {
  Vocabulary vocab = Vocabulary::build(lines({"c a b", "b c", "c"}), 1);
  // c:3, b:2, a:1.
  CHECK(vocab.size() == 7);
  CHECK(vocab.id_of("c") == 4);
  CHECK(vocab.id_of("b") == 5);
  CHECK(vocab.id_of("a") == 6);
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    const std::string& token = vocab.token_of(static_cast<TokenId>(id));
    if (id >= Vocabulary::kNumSpecials) CHECK(vocab.id_of(token) == static_cast<TokenId>(id));
  }
  CHECK_THROWS_AS(vocab.token_of(static_cast<TokenId>(vocab.size())), DataError);
  CHECK_THROWS_AS(vocab.token_of(-1), DataError);
}

TEST_CASE("words equal to special markers never become corpus tokens") {
  Vocabulary vocab = Vocabulary::build(lines({"<unk> a <pad>"}), 1);
  CHECK(vocab.size() == 5);
  CHECK(vocab.id_of("a") == 4);
  CHECK(vocab.id_of("<unk>") == Vocabulary::kUnknownId);
  CHECK(vocab.id_of("<pad>") == Vocabulary::kPadId);
}

TEST_CASE("save and load round trip") {
  Vocabulary vocab = Vocabulary::build(lines({"a b", "a"}), 1, "jav");
  fs::path path = fs::temp_directory_path() / "aksara_vocab_test.txt";
  vocab.save(path);
  Vocabulary loaded = Vocabulary::load(path);
  REQUIRE(loaded.size() == vocab.size());
  for (std::size_t id = 0; id < vocab.size(); ++id) {
    CHECK(loaded.token_of(static_cast<TokenId>(id)) == vocab.token_of(static_cast<TokenId>(id)));
  }
  fs::remove(path);
}

TEST_CASE("parse validates the line format") {
  Vocabulary vocab = Vocabulary::parse("<pad>\n<unk>\n<s>\n</s>\na\nb\n", "v.txt");
  CHECK(vocab.size() == 6);
  CHECK(vocab.id_of("b") == 5);
  // Duplicate token.
  CHECK_THROWS_AS(Vocabulary::parse("<pad>\n<unk>\n<s>\n</s>\na\na\n", "v.txt"), ValidationError);
  // Too few lines for the specials.
  CHECK_THROWS_AS(Vocabulary::parse("<pad>\n<unk>\n", "v.txt"), ValidationError);
}

TEST_CASE("encode maps words and records out-of-vocabulary positions") {
  Vocabulary vocab = Vocabulary::build(lines({"a b", "a"}), 1);
  Encoding enc = encode("a b", vocab);
  CHECK(enc.ids == std::vector<TokenId>{4, 5});
  CHECK(enc.oov_positions.empty());
  CHECK(enc.word_count == 2);

  enc = encode("a q", vocab);
  CHECK(enc.ids == std::vector<TokenId>{4, 1});
  CHECK(enc.oov_positions == std::vector<std::size_t>{1});
  CHECK(enc.word_count == 2);

  enc = encode("", vocab);
  CHECK(enc.ids.empty());
  CHECK(enc.word_count == 0);

  enc = encode("", vocab, true);
  CHECK(enc.ids == std::vector<TokenId>{Vocabulary::kBeginId, Vocabulary::kEndId});
  CHECK(enc.word_count == 0);

  enc = encode("q a", vocab, true);
  CHECK(enc.ids == std::vector<TokenId>{2, 1, 4, 3});
  CHECK(enc.oov_positions == std::vector<std::size_t>{1});
  CHECK(enc.word_count == 2);
}

TEST_CASE("decode joins tokens, skips pad, and checks ranges") {
  Vocabulary vocab = Vocabulary::build(lines({"a b", "a"}), 1);
  CHECK(decode(std::vector<TokenId>{4, 5}, vocab) == "a b");
  CHECK(decode(std::vector<TokenId>{0, 4, 0}, vocab) == "a");
  CHECK(decode(std::vector<TokenId>{2, 4, 3}, vocab) == "<s> a </s>");
  CHECK(decode(std::vector<TokenId>{}, vocab) == "");
  try {
    decode(std::vector<TokenId>{99}, vocab);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("round trip holds for out-of-vocabulary-free text") {
  Vocabulary vocab = Vocabulary::build(lines({"aksara jawa bali", "jawa"}), 1);
  const std::string text = "bali jawa aksara aksara";
  Encoding enc = encode(text, vocab);
  REQUIRE(enc.oov_positions.empty());
  CHECK(decode(enc.ids, vocab) == text);
}

TEST_CASE("split_words handles runs of mixed whitespace") {
  auto words = split_words("  a \t b\r\n c ");
  REQUIRE(words.size() == 3);
  CHECK(words[0] == "a");
  CHECK(words[1] == "b");
  CHECK(words[2] == "c");
  CHECK(split_words("").empty());
  CHECK(split_words(" \t ").empty());
}

TEST_CASE("canonicalize collapses whitespace under empty tables") {
  RuleTable empty_a("none", "to_aksara", {});
  RuleTable empty_b("none", "to_latin", {});
  ScriptRules rules("none", {}, {}, {});
  CHECK(canonicalize("  a   b ", empty_a, rules, empty_b) == "a b");
  CHECK(canonicalize("", empty_a, rules, empty_b) == "");
  CHECK(canonicalize(" \t ", empty_a, rules, empty_b) == "");
}

TEST_CASE("canonicalize is the identity for bijective coverage") {
  RuleTable forward("test", "to_aksara", {{"ka", "\xEA\xA6\x8F"}, {"ga", "\xEA\xA6\x92"}});
  RuleTable backward = invert_table(forward);
  ScriptRules rules("test", {}, {}, {});
  CHECK(canonicalize("kaga ka", forward, rules, backward) == "kaga ka");
}

TEST_CASE("canonicalize normalizes variant spellings via the shipped tables") {
  RuleTable to_aksara = RuleTable::load(std::string(AKSARA_RULES_DIR) + "/jav_to_aksara.rules");
  RuleTable to_latin = RuleTable::load(std::string(AKSARA_RULES_DIR) + "/jav_to_latin.rules");
  ScriptRules rules = ScriptRules::load(std::string(AKSARA_RULES_DIR) + "/jav_script.rules");
  // Dutch-era digraphs dj/tj round trip to the modern spelling.
  CHECK(canonicalize("djarwa", to_aksara, rules, to_latin) == "jarwa");
  CHECK(canonicalize("tjarita", to_aksara, rules, to_latin) == "carita");
  // Already-canonical text is a fixed point.
  CHECK(canonicalize("jarwa", to_aksara, rules, to_latin) == "jarwa");
  std::string once = canonicalize("aksara djawi 134 ,", to_aksara, rules, to_latin);
  CHECK(once == canonicalize(once, to_aksara, rules, to_latin));
}

}  // namespace
}  // namespace aksara
