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

#include "aksara/grapheme.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/utf8.hpp"
#include "doctest.h"

namespace aksara {
namespace {

std::string from_codepoints(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) utf8::append(out, cp);
  return out;
}

std::vector<std::string> cluster_texts(const std::vector<GraphemeCluster>& clusters) {
  std::vector<std::string> out;
  for (const auto& c : clusters) out.emplace_back(c.text);
  return out;
}

ScriptRules javanese_rules() {
  return ScriptRules("jav", {{0xA9C0, 0xA9C0}}, {{0xA98F, 0xA9B2}}, {});
}

// Reference merge pass: scan segment_base output and join cluster pairs by
// the stated rule until a fixed point. Deliberately naive.
std::vector<GraphemeCluster> brute_force_script(std::string_view text, const ScriptRules& rules) {
  std::vector<GraphemeCluster> clusters = segment_base(text);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
      char32_t last = utf8::decode_before(text, clusters[i].end).cp;
      char32_t first = utf8::decode(text, clusters[i + 1].begin).cp;
      bool merge = (rules.is_virama(last) && rules.is_consonant(first)) || rules.is_joiner(first);
      if (merge) {
        clusters[i].end = clusters[i + 1].end;
        clusters[i].text = text.substr(clusters[i].begin, clusters[i].end - clusters[i].begin);
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(i + 1));
        changed = true;
        break;
      }
    }
  }
  return clusters;
}

void check_tiling(std::string_view text, const std::vector<GraphemeCluster>& clusters) {
  std::size_t pos = 0;
  std::string joined;
  for (const auto& c : clusters) {
    CHECK(c.begin == pos);
    CHECK(c.end > c.begin);
    CHECK(c.text == text.substr(c.begin, c.end - c.begin));
    joined += c.text;
    pos = c.end;
  }
  CHECK(pos == text.size());
  CHECK(joined == text);
}

TEST_CASE("segment_base on empty and plain ASCII") {
  CHECK(segment_base("").empty());
  auto clusters = segment_base("ab");
  CHECK(cluster_texts(clusters) == std::vector<std::string>{"a", "b"});
  check_tiling("ab", clusters);
}

TEST_CASE("segment_base keeps combining marks with their base") {
  std::string text = from_codepoints({U'e', 0x0301});
  auto clusters = segment_base(text);
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].text == text);
}

TEST_CASE("segment_base rejects malformed input with the byte offset") {
  try {
    segment_base("ab\xC3");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("segment_base matches the frozen reference fixture") {
  std::ifstream in(std::string(AKSARA_TEST_DATA_DIR) + "/grapheme_fixture.tsv");
  REQUIRE(in.is_open());
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    std::vector<char32_t> cps;
    {
      std::istringstream fields(line.substr(0, tab));
      std::string hex;
      while (fields >> hex) cps.push_back(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
    }
    std::vector<std::size_t> expected_sizes;
    {
      std::istringstream fields(line.substr(tab + 1));
      std::size_t n = 0;
      while (fields >> n) expected_sizes.push_back(n);
    }
    std::string text = from_codepoints(cps);
    auto clusters = segment_base(text);
    check_tiling(text, clusters);
    std::vector<std::size_t> actual_sizes;
    for (const auto& c : clusters) actual_sizes.push_back(utf8::codepoints(c.text).size());
    INFO("fixture line: ", line);
    CHECK(actual_sizes == expected_sizes);
    ++cases;
  }
  CHECK(cases == 50);
}

TEST_CASE("first_cluster_length treats pos as a fresh start") {
  std::string text = from_codepoints({U'e', 0x0301, U'b'});
  CHECK(first_cluster_length(text, 0) == 3);
  CHECK(first_cluster_length(text, 3) == 1);
}

TEST_CASE("segment_script equals segment_base when no virama appears") {
  ScriptRules rules = javanese_rules();
  std::string text = from_codepoints({0xA98F, 0xA9B6, U' ', 0xA992});
  auto script = segment_script(text, rules);
  auto base = segment_base(text);
  REQUIRE(script.size() == base.size());
  for (std::size_t i = 0; i < script.size(); ++i) {
    CHECK(script[i].begin == base[i].begin);
    CHECK(script[i].end == base[i].end);
  }
}

TEST_CASE("segment_script merges consonant-virama-consonant into one cluster") {
  ScriptRules rules = javanese_rules();
  std::string text = from_codepoints({0xA98F, 0xA9C0, 0xA992});
  auto clusters = segment_script(text, rules);
  REQUIRE(clusters.size() == 1);
  CHECK(utf8::codepoints(clusters[0].text).size() == 3);
  check_tiling(text, clusters);
}

TEST_CASE("segment_script merges conjunct stacks left to right") {
  ScriptRules rules = javanese_rules();
  // C virama C virama C: one cluster of 5 codepoints.
  std::string text = from_codepoints({0xA98F, 0xA9C0, 0xA992, 0xA9C0, 0xA9A4});
  auto clusters = segment_script(text, rules);
  REQUIRE(clusters.size() == 1);
  CHECK(utf8::codepoints(clusters[0].text).size() == 5);
}

TEST_CASE("segment_script blocks the merge when a non-consonant follows") {
  ScriptRules rules = javanese_rules();
  std::string text = from_codepoints({0xA98F, 0xA9C0, U'7'});
  auto clusters = segment_script(text, rules);
  REQUIRE(clusters.size() == 2);
  CHECK(utf8::codepoints(clusters[0].text).size() == 2);
  CHECK(clusters[1].text == "7");
}

TEST_CASE("segment_script absorbs extra joiners into the preceding cluster") {
  ScriptRules rules("ljp", {{0xE02A, 0xE02A}}, {{0xE000, 0xE013}}, {{0xE020, 0xE02A}});
  std::string text = from_codepoints({0xE000, 0xE020, 0xE001});
  auto clusters = segment_script(text, rules);
  REQUIRE(clusters.size() == 2);
  CHECK(utf8::codepoints(clusters[0].text).size() == 2);
  CHECK(utf8::codepoints(clusters[1].text).size() == 1);

  // Virama then consonant still merges across the private-use script.
  std::string conjunct = from_codepoints({0xE000, 0xE02A, 0xE001});
  auto merged = segment_script(conjunct, rules);
  REQUIRE(merged.size() == 1);
}

TEST_CASE("segment_script properties hold on randomized script text") {
  ScriptRules rules = javanese_rules();
  std::mt19937_64 rng(0x5eedu);
  const std::vector<char32_t> alphabet = {
      0xA98F, 0xA992, 0xA9A4, 0xA9B2, 0xA9C0, 0xA9B6, 0xA9B8, U'a', U'b', U' ', U'7', 0x0301,
  };
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<char32_t> cps;
    std::size_t len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i) cps.push_back(alphabet[rng() % alphabet.size()]);
    std::string text = from_codepoints(cps);

    auto script = segment_script(text, rules);
    check_tiling(text, script);

    // Against the naive merge oracle.
    auto oracle = brute_force_script(text, rules);
    REQUIRE(script.size() == oracle.size());
    for (std::size_t i = 0; i < script.size(); ++i) {
      CHECK(script[i].begin == oracle[i].begin);
      CHECK(script[i].end == oracle[i].end);
    }

    // Refinement: every script boundary is a base boundary.
    auto base = segment_base(text);
    std::vector<std::size_t> base_bounds;
    for (const auto& c : base) base_bounds.push_back(c.begin);
    for (const auto& c : script) {
      CHECK(std::find(base_bounds.begin(), base_bounds.end(), c.begin) != base_bounds.end());
    }

    // Idempotence: re-segmenting one cluster yields exactly that cluster.
    for (const auto& c : script) {
      auto again = segment_script(c.text, rules);
      REQUIRE(again.size() == 1);
      CHECK(again[0].text == c.text);
    }

    // Determinism.
    auto repeat = segment_script(text, rules);
    REQUIRE(repeat.size() == script.size());
    for (std::size_t i = 0; i < script.size(); ++i) CHECK(repeat[i].begin == script[i].begin);
  }
}

TEST_CASE("ScriptRules parses the declarative format") {
  const char* contents =
      "script: jav\n"
      "# Javanese joining rules.\n"
      "virama\tU+A9C0\n"
      "consonant\tU+A98F..U+A9B2\n";
  ScriptRules rules = ScriptRules::parse(contents, "test");
  CHECK(rules.script_id() == "jav");
  CHECK(rules.is_virama(0xA9C0));
  CHECK_FALSE(rules.is_virama(0xA98F));
  CHECK(rules.is_consonant(0xA98F));
  CHECK(rules.is_consonant(0xA9B2));
  CHECK_FALSE(rules.is_consonant(0xA9B3));
  CHECK_FALSE(rules.is_joiner(0xA9C0));
}

TEST_CASE("ScriptRules rejects malformed files") {
  CHECK_THROWS_AS(ScriptRules::parse("virama\tU+A9C0\n", "test"), ValidationError);  // no header
  CHECK_THROWS_AS(ScriptRules::parse("script: jav\nvirama\tU+ZZZZ\n", "test"), ValidationError);
  CHECK_THROWS_AS(ScriptRules::parse("script: jav\nnoise\tU+A9C0\n", "test"), ValidationError);
  // Virama and consonant sets must not intersect.
  CHECK_THROWS_AS(
      ScriptRules::parse("script: jav\nvirama\tU+A990\nconsonant\tU+A98F..U+A9B2\n", "test"),
      ValidationError);
  // Byte-order mark is forbidden.
  CHECK_THROWS_AS(ScriptRules::parse("\xEF\xBB\xBFscript: jav\n", "test"), ValidationError);
}

TEST_CASE("shipped script rule files load") {
  for (const char* name : {"jav", "ban", "sun", "ljp"}) {
    ScriptRules rules = ScriptRules::load(std::string(AKSARA_RULES_DIR) + "/" + name + "_script.rules");
    CHECK(rules.script_id() == name);
  }
}

}  // namespace
}  // namespace aksara
