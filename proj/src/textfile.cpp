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

#include "textfile.hpp"

#include <fstream>
#include <sstream>

#include "aksara/error.hpp"

namespace aksara::detail {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path.string());
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("write failure: " + path.string());
}

void reject_bom(std::string_view contents, std::string_view source_name) {
  if (contents.size() >= 3 && contents.substr(0, 3) == "\xEF\xBB\xBF") {
    throw ValidationError(std::string(source_name) + ": byte-order mark is forbidden");
  }
}

std::string_view trim_ascii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_header(std::string_view line, std::string_view key, std::string& value) {
  std::string_view t = trim_ascii(line);
  if (t.size() <= key.size() + 1 || t.substr(0, key.size()) != key || t[key.size()] != ':')
    return false;
  value = std::string(trim_ascii(t.substr(key.size() + 1)));
  return !value.empty();
}

namespace {

char32_t parse_hex_cp(std::string_view hex, std::string_view source_name, std::size_t line_no) {
  if (hex.substr(0, 2) == "U+" || hex.substr(0, 2) == "u+") hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 6) {
    throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                          ": bad codepoint literal");
  }
  char32_t value = 0;
  for (char c : hex) {
    value <<= 4;
    if (c >= '0' && c <= '9')
      value |= static_cast<char32_t>(c - '0');
    else if (c >= 'a' && c <= 'f')
      value |= static_cast<char32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      value |= static_cast<char32_t>(c - 'A' + 10);
    else
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": bad codepoint literal");
  }
  if (value > 0x10FFFF) {
    throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                          ": codepoint out of range");
  }
  return value;
}

}  // namespace

std::pair<char32_t, char32_t> parse_codepoint_spec(std::string_view spec,
                                                   std::string_view source_name,
                                                   std::size_t line_no) {
  spec = trim_ascii(spec);
  std::size_t dots = spec.find("..");
  if (dots == std::string_view::npos) {
    char32_t cp = parse_hex_cp(spec, source_name, line_no);
    return {cp, cp};
  }
  char32_t lo = parse_hex_cp(trim_ascii(spec.substr(0, dots)), source_name, line_no);
  char32_t hi = parse_hex_cp(trim_ascii(spec.substr(dots + 2)), source_name, line_no);
  if (hi < lo) {
    throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                          ": descending codepoint range");
  }
  return {lo, hi};
}

}  // namespace aksara::detail
