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
#include <cstdio>
#include <iterator>

#include "aksara/error.hpp"
#include "aksara/utf8.hpp"
#include "textfile.hpp"

namespace aksara {

namespace {

enum class GraphemeBreak : unsigned char {
  Other,
  Control,
  CR,
  LF,
  Extend,
  Zwj,
  RegionalIndicator,
  Prepend,
  SpacingMark,
  HangulL,
  HangulV,
  HangulT,
  HangulLV,
  HangulLVT,
};

struct BreakRange {
  char32_t lo;
  char32_t hi;
  GraphemeBreak prop;
};

#include "grapheme_break_data.inc"

GraphemeBreak break_property(char32_t cp) {
  auto it = std::upper_bound(std::begin(kGraphemeBreakRanges), std::end(kGraphemeBreakRanges),
                             cp, [](char32_t v, const BreakRange& r) { return v < r.lo; });
  if (it != std::begin(kGraphemeBreakRanges)) {
    const BreakRange& r = *std::prev(it);
    if (cp >= r.lo && cp <= r.hi) return r.prop;
  }
  return GraphemeBreak::Other;
}

bool is_extended_pictographic(char32_t cp) {
  auto it = std::upper_bound(std::begin(kExtendedPictographicRanges),
                             std::end(kExtendedPictographicRanges), cp,
                             [](char32_t v, const CodepointRange& r) { return v < r.lo; });
  if (it != std::begin(kExtendedPictographicRanges)) {
    const CodepointRange& r = *std::prev(it);
    if (r.contains(cp)) return true;
  }
  return false;
}

// Boundary rules of UAX #29 (Unicode 14.0) between two adjacent codepoints.
// ri_run counts the regional-indicator run ending at `before`; gb11_armed is
// true when the text before `after` matches ExtPict Extend* ZWJ.
bool is_break(GraphemeBreak before, GraphemeBreak after, bool after_ext_pict, bool gb11_armed,
              unsigned ri_run) {
  using B = GraphemeBreak;
  if (before == B::CR && after == B::LF) return false;                           // GB3
  if (before == B::Control || before == B::CR || before == B::LF) return true;   // GB4
  if (after == B::Control || after == B::CR || after == B::LF) return true;      // GB5
  if (before == B::HangulL && (after == B::HangulL || after == B::HangulV ||
                               after == B::HangulLV || after == B::HangulLVT))
    return false;                                                                // GB6
  if ((before == B::HangulLV || before == B::HangulV) &&
      (after == B::HangulV || after == B::HangulT))
    return false;                                                                // GB7
  if ((before == B::HangulLVT || before == B::HangulT) && after == B::HangulT)
    return false;                                                                // GB8
  if (after == B::Extend || after == B::Zwj) return false;                       // GB9
  if (after == B::SpacingMark) return false;                                     // GB9a
  if (before == B::Prepend) return false;                                        // GB9b
  if (gb11_armed && before == B::Zwj && after_ext_pict) return false;            // GB11
  if (before == B::RegionalIndicator && after == B::RegionalIndicator && ri_run % 2 == 1)
    return false;                                                                // GB12, GB13
  return true;                                                                   // GB999
}

char32_t first_codepoint(std::string_view cluster) { return utf8::decode(cluster, 0).cp; }

// Streams codepoints left to right and reports whether a cluster boundary
// lies immediately before each one. Tracks the GB11 emoji sequence and the
// GB12/13 regional-indicator parity.
class BoundaryScanner {
 public:
  bool boundary_before(char32_t cp) {
    const GraphemeBreak prop = break_property(cp);
    const bool ext_pict = is_extended_pictographic(cp);
    const bool brk = !first_ && is_break(prev_, prop, ext_pict, gb11_armed_, ri_run_);

    if (ext_pict) {
      pict_run_ = true;
      gb11_armed_ = false;
    } else if (pict_run_ && !gb11_armed_ && prop == GraphemeBreak::Extend) {
      // still inside ExtPict Extend*
    } else if (pict_run_ && !gb11_armed_ && prop == GraphemeBreak::Zwj) {
      gb11_armed_ = true;
    } else {
      pict_run_ = false;
      gb11_armed_ = false;
    }
    ri_run_ = (prop == GraphemeBreak::RegionalIndicator) ? ri_run_ + 1 : 0;
    prev_ = prop;
    first_ = false;
    return brk;
  }

 private:
  GraphemeBreak prev_ = GraphemeBreak::Other;
  bool pict_run_ = false;    // matched ExtPict Extend*
  bool gb11_armed_ = false;  // matched ExtPict Extend* ZWJ
  unsigned ri_run_ = 0;
  bool first_ = true;
};

}  // namespace

std::vector<GraphemeCluster> segment_base(std::string_view text) {
  std::vector<GraphemeCluster> clusters;
  if (text.empty()) return clusters;

  BoundaryScanner scanner;
  std::size_t cluster_begin = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const utf8::Decoded d = utf8::decode(text, pos);
    if (scanner.boundary_before(d.cp) && pos != cluster_begin) {
      clusters.push_back({text.substr(cluster_begin, pos - cluster_begin), cluster_begin, pos});
      cluster_begin = pos;
    }
    pos += static_cast<std::size_t>(d.width);
  }
  clusters.push_back({text.substr(cluster_begin), cluster_begin, text.size()});
  return clusters;
}

std::size_t first_cluster_length(std::string_view text, std::size_t pos) {
  BoundaryScanner scanner;
  std::size_t end = pos;
  while (end < text.size()) {
    const utf8::Decoded d = utf8::decode(text, end);
    if (scanner.boundary_before(d.cp) && end != pos) break;
    end += static_cast<std::size_t>(d.width);
  }
  return end - pos;
}

std::vector<GraphemeCluster> segment_script(std::string_view text, const ScriptRules& rules) {
  std::vector<GraphemeCluster> merged;
  char32_t last_cp_of_back = 0;
  for (const GraphemeCluster& cluster : segment_base(text)) {
    if (!merged.empty()) {
      const char32_t head = first_codepoint(cluster.text);
      const bool join = rules.is_joiner(head) ||
                        (rules.is_virama(last_cp_of_back) && rules.is_consonant(head));
      if (join) {
        GraphemeCluster& back = merged.back();
        back.end = cluster.end;
        back.text = text.substr(back.begin, back.end - back.begin);
        last_cp_of_back = utf8::decode_before(cluster.text, cluster.text.size()).cp;
        continue;
      }
    }
    merged.push_back(cluster);
    last_cp_of_back = utf8::decode_before(cluster.text, cluster.text.size()).cp;
  }
  return merged;
}

ScriptRules::ScriptRules(std::string script_id, std::vector<CodepointRange> viramas,
                         std::vector<CodepointRange> consonants,
                         std::vector<CodepointRange> extra_joiners)
    : script_id_(std::move(script_id)),
      viramas_(std::move(viramas)),
      consonants_(std::move(consonants)),
      joiners_(std::move(extra_joiners)) {
  if (script_id_.empty()) throw ValidationError("script rules: empty script id");
  for (const CodepointRange& v : viramas_) {
    for (const CodepointRange& c : consonants_) {
      if (v.lo <= c.hi && c.lo <= v.hi) {
        char hex[16];
        std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(std::max(v.lo, c.lo)));
        throw ValidationError("script rules '" + script_id_ +
                              "': virama and consonant sets overlap at " + hex);
      }
    }
  }
}

bool ScriptRules::contains(const std::vector<CodepointRange>& ranges, char32_t cp) {
  for (const CodepointRange& r : ranges) {
    if (r.contains(cp)) return true;
  }
  return false;
}

ScriptRules ScriptRules::parse(std::string_view contents, std::string_view source_name) {
  detail::reject_bom(contents, source_name);
  std::string script_id;
  std::vector<CodepointRange> viramas, consonants, joiners;

  detail::for_each_line(contents, [&](std::size_t line_no, std::string_view raw) {
    std::string_view line = detail::trim_ascii(raw);
    if (line.empty() || line.front() == '#') return;
    std::string value;
    if (detail::parse_header(line, "script", value)) {
      script_id = value;
      return;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": expected `kind<TAB>codepoints`");
    }
    std::string_view kind = detail::trim_ascii(line.substr(0, tab));
    auto [lo, hi] = detail::parse_codepoint_spec(line.substr(tab + 1), source_name, line_no);
    if (kind == "virama")
      viramas.push_back({lo, hi});
    else if (kind == "consonant")
      consonants.push_back({lo, hi});
    else if (kind == "joiner")
      joiners.push_back({lo, hi});
    else
      throw ValidationError(std::string(source_name) + ":" + std::to_string(line_no) +
                            ": unknown rule kind '" + std::string(kind) + "'");
  });

  if (script_id.empty()) {
    throw ValidationError(std::string(source_name) + ": missing `script: <id>` header");
  }
  return ScriptRules(std::move(script_id), std::move(viramas), std::move(consonants),
                     std::move(joiners));
}

ScriptRules ScriptRules::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path), path.string());
}

}  // namespace aksara
