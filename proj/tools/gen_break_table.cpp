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

// Regenerates src/grapheme_break_data.inc from the ICU build installed on
// the host. Run from the repository root:
//
//   gen_break_table > src/grapheme_break_data.inc
//
// The committed table was produced with ICU 70.1 (Unicode 14.0).

#include <unicode/uchar.h>
#include <unicode/uversion.h>

#include <cstdio>
#include <string>
#include <vector>

namespace {

const char* property_name(int gcb) {
  switch (gcb) {
    case U_GCB_CONTROL: return "Control";
    case U_GCB_CR: return "CR";
    case U_GCB_LF: return "LF";
    case U_GCB_EXTEND: return "Extend";
    case U_GCB_ZWJ: return "Zwj";
    case U_GCB_REGIONAL_INDICATOR: return "RegionalIndicator";
    case U_GCB_PREPEND: return "Prepend";
    case U_GCB_SPACING_MARK: return "SpacingMark";
    case U_GCB_L: return "HangulL";
    case U_GCB_V: return "HangulV";
    case U_GCB_T: return "HangulT";
    case U_GCB_LV: return "HangulLV";
    case U_GCB_LVT: return "HangulLVT";
    default: return "Other";
  }
}

struct Range {
  char32_t lo;
  char32_t hi;
  std::string name;
};

std::vector<Range> coalesce(const std::vector<std::string>& per_cp) {
  std::vector<Range> out;
  for (char32_t cp = 0; cp <= 0x10FFFF; ++cp) {
    const std::string& name = per_cp[cp];
    if (!out.empty() && out.back().name == name && out.back().hi + 1 == cp) {
      out.back().hi = cp;
    } else {
      out.push_back({cp, cp, name});
    }
  }
  return out;
}

}  // namespace

int main() {
  UVersionInfo vi;
  u_getVersion(vi);
  char icu_version[U_MAX_VERSION_STRING_LENGTH];
  u_versionToString(vi, icu_version);
  u_getUnicodeVersion(vi);
  char unicode_version[U_MAX_VERSION_STRING_LENGTH];
  u_versionToString(vi, unicode_version);

  std::vector<std::string> gcb(0x110000);
  std::vector<std::string> ext_pict(0x110000);
  for (char32_t cp = 0; cp <= 0x10FFFF; ++cp) {
    gcb[cp] = property_name(
        u_getIntPropertyValue(static_cast<UChar32>(cp), UCHAR_GRAPHEME_CLUSTER_BREAK));
    ext_pict[cp] =
        u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_EXTENDED_PICTOGRAPHIC) ? "y" : "n";
  }

  std::printf("// Generated by tools/gen_break_table.cpp from ICU %s (Unicode %s).\n",
              icu_version, unicode_version);
  std::printf("// Do not edit by hand.\n\n");

  std::printf("inline constexpr BreakRange kGraphemeBreakRanges[] = {\n");
  int count = 0;
  for (const Range& r : coalesce(gcb)) {
    if (r.name == "Other") continue;  // lookup defaults to Other
    std::printf("    {0x%04X, 0x%04X, GraphemeBreak::%s},\n", static_cast<unsigned>(r.lo),
                static_cast<unsigned>(r.hi), r.name.c_str());
    ++count;
  }
  std::printf("};\n\n");

  std::printf("inline constexpr CodepointRange kExtendedPictographicRanges[] = {\n");
  for (const Range& r : coalesce(ext_pict)) {
    if (r.name == "n") continue;
    std::printf("    {0x%04X, 0x%04X},\n", static_cast<unsigned>(r.lo),
                static_cast<unsigned>(r.hi));
  }
  std::printf("};\n");
  std::fprintf(stderr, "emitted %d break ranges\n", count);
  return 0;
}
