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

#include "aksara/render.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aksara/error.hpp"
#include "aksara/utf8.hpp"
#include "schrift.h"

namespace aksara {

namespace {

#include "test_font_data.inc"

constexpr int kInkThreshold = 25;
constexpr int kTestAdvancePx = 6;
constexpr int kTestAscentPx = 7;

// Box shown for codepoints outside the builtin table's ASCII range.
constexpr unsigned char kFallbackRows[7] = {0x1F, 0x11, 0x11, 0x11, 0x11, 0x11, 0x1F};

std::uint8_t blend(std::uint8_t dst, std::uint8_t fg, int coverage) {
  return static_cast<std::uint8_t>(dst + ((fg - dst) * coverage + 127) / 255);
}

int round_fx_to_px(std::int64_t fx) { return static_cast<int>((fx + 32) >> 6); }

int ceil_fx_to_px(std::int64_t fx) { return static_cast<int>((fx + 63) >> 6); }

}  // namespace

void RenderConfig::validate() const {
  if (patch_side < 1) throw ValidationError("patch_side must be at least 1");
  if (max_patches < 1) throw ValidationError("max_patches must be at least 1");
  if (background == foreground) {
    throw ValidationError("background and foreground gray levels must differ");
  }
  if (dpi < 1) throw ValidationError("dpi must be positive");
  if (font_size < 1) throw ValidationError("font_size must be positive");
  if (padding_px < 0) throw ValidationError("padding_px must not be negative");
  if (font_asset.empty()) throw ValidationError("font_asset must name a glyph source");
}

int RenderConfig::pixel_em() const {
  return static_cast<int>((static_cast<long>(font_size) * dpi + 36) / 72);
}

Image::Image(int w, int h, std::uint8_t fill)
    : width(w),
      height(h),
      pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

std::int32_t TestFontBackend::advance_fx(char32_t) const { return kTestAdvancePx << 6; }

int TestFontBackend::ascent_px() const { return kTestAscentPx; }

void TestFontBackend::blit(char32_t cp, int pen_x, int baseline_y, std::uint8_t foreground,
                           Image* canvas) const {
  if (cp == U' ') return;
  const unsigned char* rows = kFallbackRows;
  if (cp > 0x20 && cp < 0x7F) rows = kAscii5x7[cp - 0x20];
  for (int row = 0; row < 7; ++row) {
    int y = baseline_y - 7 + row;
    if (y < 0 || y >= canvas->height) continue;
    for (int col = 0; col < 5; ++col) {
      if (!(rows[row] & (1 << (4 - col)))) continue;
      int x = pen_x + col;
      if (x < 0 || x >= canvas->width) continue;
      canvas->at(x, y) = foreground;
    }
  }
}

struct TtfFontBackend::Impl {
  SFT_Font* font = nullptr;
  SFT sft{};
  int ascent = 0;
};

TtfFontBackend::TtfFontBackend(const std::string& path, int pixel_em)
    : impl_(std::make_unique<Impl>()) {
  impl_->font = sft_loadfile(path.c_str());
  if (impl_->font == nullptr) {
    throw ValidationError("cannot load font file: " + path);
  }
  impl_->sft.font = impl_->font;
  impl_->sft.xScale = pixel_em;
  impl_->sft.yScale = pixel_em;
  impl_->sft.xOffset = 0.0;
  impl_->sft.yOffset = 0.0;
  impl_->sft.flags = SFT_DOWNWARD_Y;

  SFT_LMetrics lm;
  if (sft_lmetrics(&impl_->sft, &lm) < 0) {
    sft_freefont(impl_->font);
    impl_->font = nullptr;
    throw ValidationError("font file has no usable line metrics: " + path);
  }
  impl_->ascent = static_cast<int>(std::lround(lm.ascender));
}

TtfFontBackend::~TtfFontBackend() {
  if (impl_ && impl_->font != nullptr) sft_freefont(impl_->font);
}

std::int32_t TtfFontBackend::advance_fx(char32_t cp) const {
  SFT_Glyph glyph;
  if (sft_lookup(&impl_->sft, cp, &glyph) < 0) glyph = 0;
  SFT_GMetrics gm;
  if (sft_gmetrics(&impl_->sft, glyph, &gm) < 0) return 0;
  std::int32_t fx = static_cast<std::int32_t>(std::llround(gm.advanceWidth * 64.0));
  return fx < 0 ? 0 : fx;
}

int TtfFontBackend::ascent_px() const { return impl_->ascent; }

void TtfFontBackend::blit(char32_t cp, int pen_x, int baseline_y, std::uint8_t foreground,
                          Image* canvas) const {
  SFT_Glyph glyph;
  if (sft_lookup(&impl_->sft, cp, &glyph) < 0) glyph = 0;
  SFT_GMetrics gm;
  if (sft_gmetrics(&impl_->sft, glyph, &gm) < 0) return;
  if (gm.minWidth <= 0 || gm.minHeight <= 0) return;

  Image coverage(gm.minWidth, gm.minHeight, 0);
  SFT_Image target;
  target.pixels = coverage.pixels.data();
  target.width = coverage.width;
  target.height = coverage.height;
  if (sft_render(&impl_->sft, glyph, target) < 0) return;

  int left = pen_x + static_cast<int>(std::floor(gm.leftSideBearing));
  int top = baseline_y + gm.yOffset;
  for (int row = 0; row < coverage.height; ++row) {
    int y = top + row;
    if (y < 0 || y >= canvas->height) continue;
    for (int col = 0; col < coverage.width; ++col) {
      int x = left + col;
      if (x < 0 || x >= canvas->width) continue;
      int cov = coverage.at(col, row);
      if (cov == 0) continue;
      canvas->at(x, y) = blend(canvas->at(x, y), foreground, cov);
    }
  }
}

std::unique_ptr<GlyphBackend> open_backend(const RenderConfig& config) {
  config.validate();
  if (config.font_asset == "builtin:ascii5x7") {
    return std::make_unique<TestFontBackend>();
  }
  return std::make_unique<TtfFontBackend>(config.font_asset, config.pixel_em());
}

RenderResult render_strip(std::string_view text, const RenderConfig& config,
                          const GlyphBackend& backend) {
  config.validate();
  std::vector<char32_t> cps = utf8::codepoints(text);

  std::int64_t pen_fx = static_cast<std::int64_t>(config.padding_px) << 6;
  std::vector<std::int64_t> origins_fx;
  origins_fx.reserve(cps.size());
  for (char32_t cp : cps) {
    origins_fx.push_back(pen_fx);
    pen_fx += backend.advance_fx(cp);
  }

  int content_px = ceil_fx_to_px(pen_fx);
  int width = std::max(config.patch_side,
                       (content_px + config.patch_side - 1) / config.patch_side *
                           config.patch_side);
  int cap = config.max_patches * config.patch_side;
  bool truncated = width > cap;
  if (truncated) width = cap;

  RenderResult result;
  result.truncated = truncated;
  result.strip = Image(width, config.patch_side, config.background);
  int baseline_y = std::min(backend.ascent_px(), config.patch_side - 1);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    int pen_x = round_fx_to_px(origins_fx[i]);
    if (pen_x >= width) break;
    backend.blit(cps[i], pen_x, baseline_y, config.foreground, &result.strip);
  }
  return result;
}

PatchSequence patchify(const Image& strip, const RenderConfig& config,
                       std::string source_text, bool truncated) {
  config.validate();
  if (strip.height != config.patch_side) {
    throw ValidationError("strip height " + std::to_string(strip.height) +
                          " does not match patch_side " + std::to_string(config.patch_side));
  }
  if (strip.width <= 0 || strip.width % config.patch_side != 0) {
    throw ValidationError("strip width " + std::to_string(strip.width) +
                          " is not a positive multiple of patch_side " +
                          std::to_string(config.patch_side));
  }

  PatchSequence sequence;
  sequence.source_text = std::move(source_text);
  sequence.truncated = truncated;
  int side = config.patch_side;
  int count = strip.width / side;
  sequence.patches.reserve(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p) {
    Image patch(side, side, config.background);
    bool has_ink = false;
    for (int y = 0; y < side; ++y) {
      for (int x = 0; x < side; ++x) {
        std::uint8_t v = strip.at(p * side + x, y);
        patch.at(x, y) = v;
        if (std::abs(static_cast<int>(v) - static_cast<int>(config.background)) > kInkThreshold) {
          has_ink = true;
        }
      }
    }
    if (has_ink) ++sequence.num_text_patches;
    sequence.patches.push_back(std::move(patch));
  }
  return sequence;
}

PatchSequence render_patches(std::string_view text, const RenderConfig& config,
                             const GlyphBackend& backend) {
  RenderResult rendered = render_strip(text, config, backend);
  return patchify(rendered.strip, config, std::string(text), rendered.truncated);
}

Image assemble_strip(const PatchSequence& sequence, const RenderConfig& config) {
  config.validate();
  int side = config.patch_side;
  int count = static_cast<int>(sequence.patches.size());
  Image strip(std::max(side, side * count), side, config.background);
  for (int p = 0; p < count; ++p) {
    const Image& patch = sequence.patches[static_cast<std::size_t>(p)];
    if (patch.width != side || patch.height != side) {
      throw ValidationError("patch " + std::to_string(p) + " is not " + std::to_string(side) +
                            "x" + std::to_string(side));
    }
    for (int y = 0; y < side; ++y) {
      for (int x = 0; x < side; ++x) strip.at(p * side + x, y) = patch.at(x, y);
    }
  }
  return strip;
}

}  // namespace aksara
