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

// Internal helpers for the line-oriented rule and data files.

#ifndef AKSARA_SRC_TEXTFILE_HPP_
#define AKSARA_SRC_TEXTFILE_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace aksara::detail {

/// Reads a whole file; throws IoError with the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Writes a whole file; throws IoError with the path on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Throws ValidationError if contents begin with a UTF-8 byte-order mark.
void reject_bom(std::string_view contents, std::string_view source_name);

/// Calls fn(line_number, line) for every line, with the trailing \n and \r
/// stripped. Line numbers are 1-based.
template <typename Fn>
void for_each_line(std::string_view contents, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    if (pos == contents.size()) {
      break;  // no trailing empty line after a final \n
    }
    std::size_t nl = contents.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? contents.substr(pos)
                                : contents.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string_view trim_ascii(std::string_view s);

/// Parses a `key: value` header line; returns false if the key differs.
bool parse_header(std::string_view line, std::string_view key, std::string& value);

/// Parses "U+A9C0", "A9C0", or a range "U+A98F..U+A9B2" (inclusive).
/// Returns {lo, hi}; throws ValidationError naming source/line on bad syntax.
std::pair<char32_t, char32_t> parse_codepoint_spec(std::string_view spec,
                                                   std::string_view source_name,
                                                   std::size_t line_no);

}  // namespace aksara::detail

#endif  // AKSARA_SRC_TEXTFILE_HPP_
