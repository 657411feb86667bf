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

// Regenerates tests/data/grapheme_fixture.tsv from the ICU build installed
// on the host. Run from the repository root:
//
//   gen_grapheme_fixture > tests/data/grapheme_fixture.tsv
//
// Each line holds space-separated hex codepoints, a tab, then the cluster
// sizes (in codepoints) reported by ICU's character break iterator. The
// committed fixture was produced with ICU 70.1 (Unicode 14.0).

#include <unicode/ubrk.h>
#include <unicode/ustring.h>
#include <unicode/utext.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

// Cluster sizes in codepoints for one UTF-32 string.
std::vector<int> cluster_sizes(const std::vector<UChar32>& cps) {
  std::vector<UChar> u16;
  std::vector<int> cp_at_unit;  // codepoint index owning each UTF-16 unit
  for (std::size_t i = 0; i < cps.size(); ++i) {
    UChar32 cp = cps[i];
    if (cp <= 0xFFFF) {
      u16.push_back(static_cast<UChar>(cp));
      cp_at_unit.push_back(static_cast<int>(i));
    } else {
      u16.push_back(static_cast<UChar>(0xD800 + ((cp - 0x10000) >> 10)));
      u16.push_back(static_cast<UChar>(0xDC00 + ((cp - 0x10000) & 0x3FF)));
      cp_at_unit.push_back(static_cast<int>(i));
      cp_at_unit.push_back(static_cast<int>(i));
    }
  }
  cp_at_unit.push_back(static_cast<int>(cps.size()));

  UErrorCode status = U_ZERO_ERROR;
  UBreakIterator* it = ubrk_open(UBRK_CHARACTER, "en", u16.data(),
                                 static_cast<int32_t>(u16.size()), &status);
  if (U_FAILURE(status)) {
    std::fprintf(stderr, "ubrk_open: %s\n", u_errorName(status));
    std::exit(1);
  }
  std::vector<int> sizes;
  int prev_cp = 0;
  for (int32_t b = ubrk_next(it); b != UBRK_DONE; b = ubrk_next(it)) {
    int cp_index = cp_at_unit[static_cast<std::size_t>(b)];
    sizes.push_back(cp_index - prev_cp);
    prev_cp = cp_index;
  }
  ubrk_close(it);
  return sizes;
}

}  // namespace

int main() {
  const std::vector<std::vector<UChar32>> fixtures = {
      // Plain ASCII and controls.
      {0x61},
      {0x61, 0x62},
      {0x61, 0x20, 0x62},
      {0x0D, 0x0A},
      {0x61, 0x0D, 0x0A, 0x62},
      {0x0A, 0x0A},
      {0x61, 0x00, 0x62},
      {0x09, 0x61},
      // Latin with combining marks.
      {0x65, 0x0301},
      {0x65, 0x0301, 0x0327},
      {0x61, 0x0308, 0x62},
      {0x0301},
      {0x61, 0x200D},
      {0x200D, 0x61},
      // Hangul jamo.
      {0x1100, 0x1161},
      {0x1100, 0x1161, 0x11A8},
      {0xAC00, 0x11A8},
      {0xAC01, 0x1100},
      {0x1100, 0x1100, 0x1161},
      // Regional indicator pairs.
      {0x1F1EE, 0x1F1E9},
      {0x1F1EE, 0x1F1E9, 0x1F1EE, 0x1F1E9},
      {0x1F1EE, 0x1F1E9, 0x1F1EE},
      {0x61, 0x1F1EE, 0x1F1E9, 0x62},
      // Emoji with modifiers and joiners.
      {0x1F600},
      {0x1F44D, 0x1F3FB},
      {0x1F469, 0x200D, 0x1F4BB},
      {0x1F468, 0x200D, 0x1F469, 0x200D, 0x1F466},
      {0x2764, 0xFE0F},
      {0x1F469, 0x1F3FD, 0x200D, 0x2708, 0xFE0F},
      // Prepend class (Arabic number sign).
      {0x0600, 0x31},
      {0x0600, 0x0600, 0x31},
      // Devanagari vowel signs. Conjunct sequences (consonant virama
      // consonant) are deliberately absent: ICU applies a CLDR tailoring to
      // linking-consonant scripts that merges them, which is not part of the
      // untailored extended-grapheme-cluster definition this fixture pins.
      {0x0915, 0x094D},
      {0x0928, 0x0940},
      // Private-use codepoints carry no break properties; the base segmenter
      // must treat each as its own cluster.
      {0xE00D, 0xE020},
      // Javanese: pangkon U+A9C0 is a spacing mark.
      {0xA98F, 0xA9C0},
      {0xA98F, 0xA9C0, 0xA992},
      {0xA98F, 0xA9B6},
      {0xA9A4, 0xA9BA, 0xA9B4},
      {0xA98F, 0xA9C0, 0x20, 0xA992},
      // Balinese: adeg adeg U+1B44, vowel signs.
      {0x1B13, 0x1B44},
      {0x1B13, 0x1B44, 0x1B22},
      {0x1B13, 0x1B36},
      {0x1B05, 0x1B13, 0x1B38},
      // Sundanese: pamaaeh U+1BAA, panghulu U+1BA4.
      {0x1B8A, 0x1BAA},
      {0x1B8A, 0x1BAA, 0x1B8D},
      {0x1B8A, 0x1BA4},
      // Thai and Arabic shaping-neutral text.
      {0x0E01, 0x0E34},
      {0x0645, 0x064E, 0x0631},
      // Mixed script run.
      {0x6F, 0x0301, 0xA98F, 0xA9C0, 0xA992, 0x1F600, 0x7A},
      // Longer sentence-like run with punctuation and digits.
      {0x31, 0x33, 0x34, 0x20, 0x2C, 0x20, 0x61, 0x6B, 0x73, 0x61, 0x72, 0x61},
  };

  std::printf("# Extended grapheme cluster fixture. Generated by gen_grapheme_fixture\n");
  std::printf("# against ICU 70.1 (Unicode 14.0). Columns: hex codepoints, tab,\n");
  std::printf("# cluster sizes in codepoints.\n");
  for (const auto& cps : fixtures) {
    std::string line;
    for (std::size_t i = 0; i < cps.size(); ++i) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%s%04X", i ? " " : "", cps[i]);
      line += buf;
    }
    line += '\t';
    const std::vector<int> sizes = cluster_sizes(cps);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%s%d", i ? " " : "", sizes[i]);
      line += buf;
    }
    std::printf("%s\n", line.c_str());
  }
  return 0;
}
