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
//
// Cross-checks base cluster segmentation against ICU's character break
// iterator: first on the frozen fixture, then on randomized strings.
//
// The random alphabet deliberately avoids scripts where ICU's iterator
// applies CLDR conjunct tailoring beyond the plain algorithm (Devanagari
// and the other linking-consonant scripts); the scripts this library
// targets are not tailored, so the two implementations must agree there.

#include <unicode/ubrk.h>
#include <unicode/ustring.h>

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aksara/grapheme.hpp"
#include "aksara/utf8.hpp"

namespace {

using aksara::GraphemeCluster;

std::vector<int> icu_cluster_sizes(const std::vector<UChar32>& cps) {
  std::vector<UChar> u16;
  std::vector<int> cp_at_unit;
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

std::vector<int> library_cluster_sizes(const std::vector<UChar32>& cps) {
  std::string text;
  for (UChar32 cp : cps) aksara::utf8::append(text, static_cast<char32_t>(cp));
  std::vector<int> sizes;
  for (const GraphemeCluster& cluster : aksara::segment_base(text)) {
    sizes.push_back(static_cast<int>(aksara::utf8::codepoints(cluster.text).size()));
  }
  return sizes;
}

std::string show(const std::vector<UChar32>& cps, const std::vector<int>& lib,
                 const std::vector<int>& icu) {
  std::ostringstream out;
  out << "codepoints:";
  for (UChar32 cp : cps) out << ' ' << std::hex << cp << std::dec;
  out << "  library:";
  for (int s : lib) out << ' ' << s;
  out << "  icu:";
  for (int s : icu) out << ' ' << s;
  return out.str();
}

bool check_fixture(const std::string& path, int* cases) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) {
    std::fprintf(stderr, "cannot open fixture %s\n", path.c_str());
    return false;
  }
  std::string contents;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) contents.append(buf, got);
  std::fclose(f);

  bool ok = true;
  std::istringstream lines(contents);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::vector<UChar32> cps;
    std::istringstream left(line.substr(0, tab));
    std::string hex;
    while (left >> hex) cps.push_back(static_cast<UChar32>(std::stoul(hex, nullptr, 16)));
    std::vector<int> expected;
    std::istringstream right(line.substr(tab + 1));
    int size;
    while (right >> size) expected.push_back(size);

    std::vector<int> lib = library_cluster_sizes(cps);
    std::vector<int> icu = icu_cluster_sizes(cps);
    if (lib != expected || icu != expected) {
      std::fprintf(stderr, "fixture mismatch: %s\n", show(cps, lib, icu).c_str());
      ok = false;
    }
    ++*cases;
  }
  return ok;
}

}  // namespace

int main() {
  int fixture_cases = 0;
  bool ok = check_fixture(std::string(AKSARA_TEST_DATA_DIR) + "/grapheme_fixture.tsv",
                          &fixture_cases);
  if (fixture_cases < 50) {
    std::fprintf(stderr, "fixture has only %d cases\n", fixture_cases);
    ok = false;
  }

  const std::vector<UChar32> alphabet = {
      // Latin, digits, whitespace, controls.
      'a', 'b', 'Z', '0', ' ', 0x0D, 0x0A, 0x09,
      // Combining marks and joiners.
      0x0301, 0x0308, 0x200D, 0x0600,
      // Hangul jamo and syllables.
      0x1100, 0x1161, 0x11A8, 0xAC00, 0xAC01,
      // Regional indicators and pictographs.
      0x1F1E6, 0x1F1E7, 0x1F600, 0x1F468, 0x1F3FB,
      // Javanese, Balinese, Sundanese letters and signs.
      0xA98F, 0xA992, 0xA9C0, 0xA9B6, 0xA9BA,
      0x1B13, 0x1B44, 0x1B36,
      0x1B8A, 0x1BAA, 0x1BA4,
      // Thai, Arabic, private use.
      0x0E01, 0x0E34, 0x0627, 0x0644, 0xE000, 0xE021,
  };
  std::mt19937 rng(20260819);
  int failures = 0;
  const int iterations = 2000;
  for (int iter = 0; iter < iterations; ++iter) {
    std::vector<UChar32> cps;
    std::size_t len = rng() % 17;
    for (std::size_t i = 0; i < len; ++i) cps.push_back(alphabet[rng() % alphabet.size()]);
    std::vector<int> lib = library_cluster_sizes(cps);
    std::vector<int> icu = icu_cluster_sizes(cps);
    if (lib != icu) {
      if (++failures <= 10) {
        std::fprintf(stderr, "divergence at iteration %d: %s\n", iter,
                     show(cps, lib, icu).c_str());
      }
    }
  }
  if (failures > 0) {
    std::fprintf(stderr, "%d of %d random strings diverged\n", failures, iterations);
    ok = false;
  }
  if (ok) {
    std::printf("segmentation oracle: %d fixture cases and %d random strings agree\n",
                fixture_cases, iterations);
  }
  return ok ? 0 : 1;
}
