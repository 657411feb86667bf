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

#ifndef AKSARA_IMAGE_IO_HPP_
#define AKSARA_IMAGE_IO_HPP_

#include <string>

#include "aksara/render.hpp"

namespace aksara {

/// Encodes an 8-bit grayscale image as a portable network graphics stream
/// (color type 0, bit depth 8, filter 0, fixed compression level) so the
/// bytes are stable for a given zlib build.
std::string encode_png(const Image& image);

/// Decodes a single-channel 8-bit PNG produced by this toolkit or any
/// baseline encoder (all five scanline filters are handled). Throws
/// DataError on malformed streams and on unsupported color/depth.
Image decode_png(const std::string& bytes);

void write_png(const std::string& path, const Image& image);
Image read_png(const std::string& path);

/// Serializes the patches as raw row-major bytes after a 16-byte ASCII
/// preamble "P <side> <side>\n" padded with NUL. Patches follow in order,
/// patch_side*patch_side bytes each.
std::string encode_patch_tensor(const PatchSequence& sequence, int patch_side);

void write_patch_tensor(const std::string& path, const PatchSequence& sequence, int patch_side);

}  // namespace aksara

#endif  // AKSARA_IMAGE_IO_HPP_
