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

#include "aksara/error.hpp"

namespace aksara::utf8 {

namespace {

[[noreturn]] void malformed(std::size_t pos) {
  throw DataError("malformed UTF-8 at byte offset " + std::to_string(pos));
}

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

Decoded decode(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) malformed(pos);
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const unsigned char b0 = bytes[pos];
  if (b0 < 0x80) return {b0, 1};
  if (b0 < 0xC2) malformed(pos);  // continuation byte or overlong 2-byte lead
  if (b0 < 0xE0) {
    if (pos + 1 >= text.size() || !is_continuation(bytes[pos + 1])) malformed(pos);
    return {static_cast<char32_t>(((b0 & 0x1Fu) << 6) | (bytes[pos + 1] & 0x3Fu)), 2};
  }
  if (b0 < 0xF0) {
    if (pos + 2 >= text.size() || !is_continuation(bytes[pos + 1]) ||
        !is_continuation(bytes[pos + 2]))
      malformed(pos);
    const char32_t cp = ((b0 & 0x0Fu) << 12) | ((bytes[pos + 1] & 0x3Fu) << 6) |
                        (bytes[pos + 2] & 0x3Fu);
    if (cp < 0x800) malformed(pos);                      // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) malformed(pos);    // surrogate
    return {cp, 3};
  }
  if (b0 < 0xF5) {
    if (pos + 3 >= text.size() || !is_continuation(bytes[pos + 1]) ||
        !is_continuation(bytes[pos + 2]) || !is_continuation(bytes[pos + 3]))
      malformed(pos);
    const char32_t cp = ((b0 & 0x07u) << 18) | ((bytes[pos + 1] & 0x3Fu) << 12) |
                        ((bytes[pos + 2] & 0x3Fu) << 6) | (bytes[pos + 3] & 0x3Fu);
    if (cp < 0x10000 || cp > 0x10FFFF) malformed(pos);
    return {cp, 4};
  }
  malformed(pos);
}

Decoded decode_before(std::string_view text, std::size_t end) {
  if (end == 0 || end > text.size()) malformed(end);
  std::size_t start = end - 1;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (start > 0 && is_continuation(bytes[start]) && end - start < 4) --start;
  Decoded d = decode(text, start);
  if (start + static_cast<std::size_t>(d.width) != end) malformed(start);
  return d;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(char32_t cp) {
  std::string s;
  append(s, cp);
  return s;
}

std::vector<char32_t> codepoints(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    Decoded d = decode(text, pos);
    out.push_back(d.cp);
    pos += static_cast<std::size_t>(d.width);
  }
  return out;
}

void validate(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) pos += static_cast<std::size_t>(decode(text, pos).width);
}

}  // namespace aksara::utf8
