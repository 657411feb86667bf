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

#include "aksara/translit.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/utf8.hpp"
#include "doctest.h"

namespace aksara {
namespace {

RuleTable make_table(std::vector<TransliterationRule> rules) {
  return RuleTable("test", "forward", std::move(rules));
}

TEST_CASE("parse keeps rule order and rejects duplicate sources") {
  const char* contents =
      "script: test\n"
      "direction: forward\n"
      "# digraph first\n"
      "ng\tG\n"
      "n\tN\n";
  RuleTable table = RuleTable::parse(contents, "rules.t");
  REQUIRE(table.size() == 2);
  CHECK(table.rules()[0].source == "ng");
  CHECK(table.rules()[0].target == "G");
  CHECK(table.rules()[1].source == "n");
  CHECK(table.script_id() == "test");
  CHECK(table.direction_label() == "forward");

  const char* dup =
      "script: test\n"
      "direction: forward\n"
      "ng\tG\n"
      "ng\tH\n";
  try {
    RuleTable::parse(dup, "rules.t");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    // Names the second occurrence (line 4).
    CHECK(std::string(e.what()).find("4") != std::string::npos);
    CHECK(std::string(e.what()).find("ng") != std::string::npos);
  }
}

TEST_CASE("parse requires headers and rejects byte-order marks and empty sources") {
  CHECK_THROWS_AS(RuleTable::parse("ng\tG\n", "rules.t"), ValidationError);
  CHECK_THROWS_AS(RuleTable::parse("script: test\nng\tG\n", "rules.t"), ValidationError);
  CHECK_THROWS_AS(RuleTable::parse("\xEF\xBB\xBFscript: test\ndirection: f\n", "rules.t"),
                  ValidationError);
  CHECK_THROWS_AS(RuleTable::parse("script: test\ndirection: f\n\tG\n", "rules.t"),
                  ValidationError);
}

TEST_CASE("empty rule file transliterates to identity") {
  RuleTable table = RuleTable::parse("script: test\ndirection: forward\n", "rules.t");
  CHECK(table.size() == 0);
  TransliterationResult r = transliterate("abc 134", table);
  CHECK(r.output == "abc 134");
  REQUIRE(r.unmapped_spans.size() == 1);
  CHECK(r.unmapped_spans[0] == ByteRange{0, 7});
}

TEST_CASE("longest match wins regardless of rule order") {
  RuleTable digraph_first = make_table({{"ng", "G"}, {"n", "N"}, {"g", "K"}});
  RuleTable digraph_last = make_table({{"n", "N"}, {"g", "K"}, {"ng", "G"}});
  CHECK(transliterate("ng", digraph_first).output == "G");
  CHECK(transliterate("ng", digraph_last).output == "G");
  CHECK(transliterate("gn", digraph_first).output == "KN");
  CHECK(transliterate("ngn", digraph_first).output == "GN");
}

TEST_CASE("unmatched input passes through with coalesced spans") {
  RuleTable table = make_table({{"ng", "G"}, {"n", "N"}, {"g", "K"}});
  TransliterationResult r = transliterate("n7g", table);
  CHECK(r.output == "N7K");
  REQUIRE(r.unmapped_spans.size() == 1);
  CHECK(r.unmapped_spans[0] == ByteRange{1, 2});

  r = transliterate("12 34", table);
  CHECK(r.output == "12 34");
  REQUIRE(r.unmapped_spans.size() == 1);
  CHECK(r.unmapped_spans[0] == ByteRange{0, 5});

  r = transliterate("n12n34", table);
  CHECK(r.output == "N12N34");
  REQUIRE(r.unmapped_spans.size() == 2);
  CHECK(r.unmapped_spans[0] == ByteRange{1, 3});
  CHECK(r.unmapped_spans[1] == ByteRange{4, 6});
}

TEST_CASE("pass-through advances one grapheme cluster at a time") {
  RuleTable table = make_table({{"x", "Y"}});
  // e + combining acute is unmapped; both codepoints pass through together.
  std::string text = "x";
  text += "e";
  utf8::append(text, 0x0301);
  text += "x";
  TransliterationResult r = transliterate(text, table);
  std::string expected = "Y";
  expected += "e";
  utf8::append(expected, 0x0301);
  expected += "Y";
  CHECK(r.output == expected);
  REQUIRE(r.unmapped_spans.size() == 1);
  CHECK(r.unmapped_spans[0] == ByteRange{1, 4});
}

TEST_CASE("match_at returns the longest source at a position") {
  RuleTable table = make_table({{"ng", "G"}, {"n", "N"}});
  const TransliterationRule* rule = table.match_at("ng", 0);
  REQUIRE(rule != nullptr);
  CHECK(rule->source == "ng");
  rule = table.match_at("nx", 0);
  REQUIRE(rule != nullptr);
  CHECK(rule->source == "n");
  CHECK(table.match_at("xx", 0) == nullptr);
  CHECK(table.match_at("ng", 2) == nullptr);
}

TEST_CASE("invert_table swaps sources and targets preserving order") {
  RuleTable table = make_table({{"ha", "X"}, {"na", "Y"}});
  RuleTable inverse = invert_table(table);
  REQUIRE(inverse.size() == 2);
  CHECK(inverse.rules()[0].source == "X");
  CHECK(inverse.rules()[0].target == "ha");
  CHECK(inverse.rules()[1].source == "Y");
  CHECK(inverse.rules()[1].target == "na");

  RuleTable empty = make_table({});
  CHECK(invert_table(empty).size() == 0);
}

TEST_CASE("invert_table rejects duplicate or empty targets naming both rules") {
  RuleTable dup = make_table({{"ha", "X"}, {"na", "X"}});
  try {
    invert_table(dup);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::string what = e.what();
    CHECK(what.find("'ha'") != std::string::npos);
    CHECK(what.find("'na'") != std::string::npos);
    CHECK(what.find("share target 'X'") != std::string::npos);
  }
  RuleTable empty_target = make_table({{"ha", ""}});
  CHECK_THROWS_AS(invert_table(empty_target), ValidationError);
}

TEST_CASE("round trip holds for random prefix-free bijective tables") {
  std::mt19937_64 rng(0xC0FFEEu);
  for (int iter = 0; iter < 50; ++iter) {
    // Sources: random distinct strings over {a..f}; prefix-free by fixed
    // length 2. Targets: distinct single codepoints from a disjoint block.
    std::vector<TransliterationRule> rules;
    std::set<std::string> sources;
    char32_t next_target = 0xA98F;
    while (rules.size() < 8) {
      std::string src;
      src += static_cast<char>('a' + rng() % 6);
      src += static_cast<char>('a' + rng() % 6);
      if (!sources.insert(src).second) continue;
      rules.push_back({src, utf8::encode(next_target++)});
    }
    RuleTable forward = make_table(rules);
    RuleTable backward = invert_table(forward);

    std::vector<std::string> source_pool;
    for (const auto& r : rules) source_pool.push_back(r.source);
    for (int t = 0; t < 20; ++t) {
      std::string text;
      std::size_t words = rng() % 6;
      for (std::size_t w = 0; w < words; ++w) text += source_pool[rng() % source_pool.size()];
      TransliterationResult out = transliterate(text, forward);
      CHECK(out.unmapped_spans.empty());
      TransliterationResult back = transliterate(out.output, backward);
      CHECK(back.output == text);
    }
  }
}

TEST_CASE("pass-through conservation on arbitrary text") {
  RuleTable table = make_table({{"ab", "Z"}});
  std::mt19937_64 rng(7u);
  for (int iter = 0; iter < 200; ++iter) {
    std::string text;
    std::size_t len = rng() % 10;
    for (std::size_t i = 0; i < len; ++i) text += static_cast<char>('a' + rng() % 4);
    TransliterationResult r = transliterate(text, table);
    // Spans are sorted, disjoint, and their bytes appear verbatim in output.
    std::size_t prev_end = 0;
    for (const auto& span : r.unmapped_spans) {
      CHECK(span.begin >= prev_end);
      CHECK(span.end > span.begin);
      std::string passed(text.substr(span.begin, span.end - span.begin));
      CHECK(r.output.find(passed) != std::string::npos);
      prev_end = span.end;
    }
    // Determinism and totality.
    CHECK(transliterate(text, table).output == r.output);
  }
}

TEST_CASE("shipped rule tables load and invert") {
  for (const char* name : {"jav", "ban", "sun", "ljp"}) {
    RuleTable to_aksara =
        RuleTable::load(std::string(AKSARA_RULES_DIR) + "/" + name + "_to_aksara.rules");
    RuleTable to_latin =
        RuleTable::load(std::string(AKSARA_RULES_DIR) + "/" + name + "_to_latin.rules");
    CHECK(to_aksara.script_id() == name);
    CHECK(to_latin.script_id() == name);
    CHECK(to_aksara.size() > 50);
    CHECK(to_latin.size() > 50);
  }
}

TEST_CASE("shipped Javanese tables map a basic syllable") {
  RuleTable to_aksara = RuleTable::load(std::string(AKSARA_RULES_DIR) + "/jav_to_aksara.rules");
  TransliterationResult r = transliterate("jarwa", to_aksara);
  CHECK(r.unmapped_spans.empty());
  // Greedy scan: "ja", then bare "r" (consonant plus pangkon), then "wa".
  std::vector<char32_t> cps = utf8::codepoints(r.output);
  REQUIRE(cps.size() == 4);
  CHECK(cps[0] == 0xA997);  // ja
  CHECK(cps[1] == 0xA9AB);  // ra
  CHECK(cps[2] == 0xA9C0);  // pangkon
  CHECK(cps[3] == 0xA9AE);  // wa
}

}  // namespace
}  // namespace aksara
