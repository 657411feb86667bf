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

#ifndef AKSARA_UTF8_HPP_
#define AKSARA_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace aksara::utf8 {

struct Decoded {
  char32_t cp;
  int width;  // bytes consumed, 1..4
};

/// Decodes the codepoint starting at byte `pos`. Rejects overlong forms,
/// surrogates, and values above U+10FFFF. Throws DataError naming the byte
/// offset on malformed input.
Decoded decode(std::string_view text, std::size_t pos);

/// Decodes the codepoint that ends at byte `end` (exclusive).
Decoded decode_before(std::string_view text, std::size_t end);

/// Appends the UTF-8 encoding of `cp` to `out`.
void append(std::string& out, char32_t cp);

std::string encode(char32_t cp);

/// Full-string decode; throws DataError at the first malformed byte.
std::vector<char32_t> codepoints(std::string_view text);

/// Scan-only validation with the same error behavior as codepoints().
void validate(std::string_view text);

}  // namespace aksara::utf8

#endif  // AKSARA_UTF8_HPP_
