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

#ifndef AKSARA_RENDER_HPP_
#define AKSARA_RENDER_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace aksara {

struct RenderConfig {
  int dpi = 120;
  int font_size = 7;  // points
  std::string font_asset = "builtin:ascii5x7";
  std::uint8_t background = 255;
  std::uint8_t foreground = 0;
  int padding_px = 3;
  int patch_side = 16;
  int max_patches = 1024;

  void validate() const;
  // Nominal em height in pixels: font_size * dpi / 72, rounded to nearest.
  int pixel_em() const;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, one byte per pixel

  Image() = default;
  Image(int w, int h, std::uint8_t fill);
  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  bool operator==(const Image&) const = default;
};

struct RenderResult {
  Image strip;            // height == patch_side, width a multiple of patch_side
  bool truncated = false;  // true iff max_patches clipped the layout
};

struct PatchSequence {
  std::vector<Image> patches;  // each patch_side x patch_side, left to right
  std::size_t num_text_patches = 0;
  std::string source_text;
  bool truncated = false;
};

/// Supplies per-codepoint advances and glyph bitmaps for one loaded font at
/// one fixed pixel size. Implementations are immutable after construction
/// and safe for concurrent use.
class GlyphBackend {
 public:
  virtual ~GlyphBackend() = default;

  // Horizontal advance for the codepoint in 26.6 fixed-point pixels.
  // Unmapped codepoints report the fallback glyph's advance. Never negative.
  virtual std::int32_t advance_fx(char32_t cp) const = 0;

  // Distance from the strip's top row to the baseline, in pixels.
  virtual int ascent_px() const = 0;

  // Draws the glyph with its origin at (pen_x, baseline_y), blending
  // coverage toward `foreground`. Must clip to the canvas bounds.
  virtual void blit(char32_t cp, int pen_x, int baseline_y, std::uint8_t foreground,
                    Image* canvas) const = 0;
};

/// Fixed 5x7 bitmap font over ASCII 0x20..0x7E with a box fallback glyph.
/// Advance 6 px, ascent 7 px; ignores dpi and point size. Exists so test
/// goldens never depend on font files installed on the host.
class TestFontBackend final : public GlyphBackend {
 public:
  std::int32_t advance_fx(char32_t cp) const override;
  int ascent_px() const override;
  void blit(char32_t cp, int pen_x, int baseline_y, std::uint8_t foreground,
            Image* canvas) const override;
};

/// TrueType rasterizer at pixel_em derived from the config. Unmapped
/// codepoints render as the font's own fallback glyph. Advances are
/// quantized to 26.6 fixed point so layout never depends on the float
/// environment.
class TtfFontBackend final : public GlyphBackend {
 public:
  // Throws ValidationError when the file cannot be loaded as a font.
  TtfFontBackend(const std::string& path, int pixel_em);
  ~TtfFontBackend() override;
  TtfFontBackend(const TtfFontBackend&) = delete;
  TtfFontBackend& operator=(const TtfFontBackend&) = delete;

  std::int32_t advance_fx(char32_t cp) const override;
  int ascent_px() const override;
  void blit(char32_t cp, int pen_x, int baseline_y, std::uint8_t foreground,
            Image* canvas) const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Instantiates the backend named by config.font_asset: the literal
/// "builtin:ascii5x7" selects the test font, anything else is opened as a
/// TrueType file. Throws ValidationError on unreadable or malformed fonts.
std::unique_ptr<GlyphBackend> open_backend(const RenderConfig& config);

/// Lays the text out as one continuous left-to-right strip of height
/// patch_side: padding_px background columns, then every glyph at its
/// advance, no breaks at whitespace or patch boundaries. Width is the
/// smallest multiple of patch_side covering the content, at least one
/// patch. Truncates at max_patches whole patches and sets the flag.
RenderResult render_strip(std::string_view text, const RenderConfig& config,
                          const GlyphBackend& backend);

/// Slices a strip into consecutive patch_side-wide squares. A patch counts
/// as text when any pixel differs from the background by more than the ink
/// threshold (25 of 255).
PatchSequence patchify(const Image& strip, const RenderConfig& config,
                       std::string source_text = {}, bool truncated = false);

/// render_strip then patchify.
PatchSequence render_patches(std::string_view text, const RenderConfig& config,
                             const GlyphBackend& backend);

/// Reassembles patches into the original strip (inverse of patchify).
Image assemble_strip(const PatchSequence& sequence, const RenderConfig& config);

}  // namespace aksara

#endif  // AKSARA_RENDER_HPP_
