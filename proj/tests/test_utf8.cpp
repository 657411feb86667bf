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

#include "aksara/utf8.hpp"

#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "doctest.h"

namespace aksara {
namespace {

TEST_CASE("decode handles all sequence widths") {
  utf8::Decoded d = utf8::decode("a", 0);
  CHECK(d.cp == U'a');
  CHECK(d.width == 1);

  d = utf8::decode("\xC3\xA9", 0);  // U+00E9
  CHECK(d.cp == 0xE9);
  CHECK(d.width == 2);

  d = utf8::decode("\xEA\xA6\x8F", 0);  // U+A98F
  CHECK(d.cp == 0xA98F);
  CHECK(d.width == 3);

  d = utf8::decode("\xF0\x9F\x98\x80", 0);  // U+1F600
  CHECK(d.cp == 0x1F600);
  CHECK(d.width == 4);
}

TEST_CASE("decode starts at the requested byte") {
  std::string s = "a\xC3\xA9z";
  utf8::Decoded d = utf8::decode(s, 1);
  CHECK(d.cp == 0xE9);
  CHECK(d.width == 2);
  CHECK(utf8::decode(s, 3).cp == U'z');
}

TEST_CASE("decode rejects malformed sequences with the byte offset") {
  CHECK_THROWS_AS(utf8::decode("\x80", 0), DataError);
  CHECK_THROWS_AS(utf8::decode("\xC3", 0), DataError);            // truncated
  CHECK_THROWS_AS(utf8::decode("\xC0\xAF", 0), DataError);        // overlong
  CHECK_THROWS_AS(utf8::decode("\xE0\x80\xAF", 0), DataError);    // overlong
  CHECK_THROWS_AS(utf8::decode("\xED\xA0\x80", 0), DataError);    // surrogate
  CHECK_THROWS_AS(utf8::decode("\xF4\x90\x80\x80", 0), DataError);  // > U+10FFFF
  CHECK_THROWS_AS(utf8::decode("\xF8\x88\x80\x80\x80", 0), DataError);

  try {
    utf8::decode("ab\x80", 2);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("decode_before walks backwards over multibyte sequences") {
  std::string s = "a\xC3\xA9\xF0\x9F\x98\x80";
  utf8::Decoded d = utf8::decode_before(s, s.size());
  CHECK(d.cp == 0x1F600);
  CHECK(d.width == 4);
  d = utf8::decode_before(s, 3);
  CHECK(d.cp == 0xE9);
  d = utf8::decode_before(s, 1);
  CHECK(d.cp == U'a');
}

TEST_CASE("encode and decode round trip over boundary codepoints") {
  const std::vector<char32_t> cps = {0x0,    0x7F,    0x80,    0x7FF,    0x800,
                                     0xFFFF, 0x10000, 0xA9C0,  0xE000,   0x10FFFF};
  for (char32_t cp : cps) {
    std::string bytes = utf8::encode(cp);
    utf8::Decoded d = utf8::decode(bytes, 0);
    CHECK(d.cp == cp);
    CHECK(d.width == static_cast<int>(bytes.size()));
  }
}

TEST_CASE("append concatenates encodings") {
  std::string out;
  utf8::append(out, U'a');
  utf8::append(out, 0xA98F);
  CHECK(out == "a\xEA\xA6\x8F");
}

TEST_CASE("codepoints decodes a full string") {
  std::vector<char32_t> cps = utf8::codepoints("ab\xC3\xA9");
  REQUIRE(cps.size() == 3);
  CHECK(cps[0] == U'a');
  CHECK(cps[1] == U'b');
  CHECK(cps[2] == 0xE9);
  CHECK(utf8::codepoints("").empty());
  CHECK_THROWS_AS(utf8::codepoints("ok\xFF"), DataError);
}

TEST_CASE("validate accepts valid and rejects malformed text") {
  CHECK_NOTHROW(utf8::validate("plain ascii"));
  CHECK_NOTHROW(utf8::validate("\xEA\xA6\x8F\xEA\xA7\x80"));
  CHECK_THROWS_AS(utf8::validate("\xE2\x28\xA1"), DataError);
}

}  // namespace
}  // namespace aksara
