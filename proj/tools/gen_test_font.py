#!/usr/bin/env python3
# Copyright 2026 The Aksarakit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates src/test_font_data.inc.

Rasterizes DejaVuSansMono at a small size and thresholds each ASCII glyph
into a 5x7 cell. The output table is frozen in the repository; this script
exists only to document how it was produced. Requires Pillow.
"""

from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"


def render_char(ch, size=14, canvas=(16, 20)):
    font = ImageFont.truetype(FONT, size)
    img = Image.new("L", canvas, 0)
    ImageDraw.Draw(img).text((2, 2), ch, fill=255, font=font)
    return img


def to_5x7(img):
    bbox = img.getbbox()
    if bbox is None:
        return [0] * 7
    scaled = img.crop(bbox).resize((5, 7), Image.LANCZOS)
    px = scaled.load()
    rows = []
    for y in range(7):
        bits = 0
        for x in range(5):
            if px[x, y] > 96:
                bits |= 1 << (4 - x)
        rows.append(bits)
    return rows


def main():
    print("inline constexpr unsigned char kAscii5x7[95][7] = {")
    for code in range(0x20, 0x7F):
        ch = chr(code)
        rows = [0] * 7 if ch == " " else to_5x7(render_char(ch))
        body = ", ".join("0x%02X" % r for r in rows)
        label = ch if ch != "\\" else "backslash"
        print("    {%s},  // 0x%02X %s" % (body, code, label))
    print("};")


if __name__ == "__main__":
    main()
