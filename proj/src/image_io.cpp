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

#include "aksara/image_io.hpp"

#include <zlib.h>

#include <cstdint>
#include <cstdlib>
#include <cstring>

#include "aksara/error.hpp"
#include "textfile.hpp"

namespace aksara {

namespace {

constexpr unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
constexpr int kZlibLevel = 6;

void append_u32(std::string* out, std::uint32_t v) {
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>(v & 0xFF));
}

std::uint32_t read_u32(const std::string& bytes, std::size_t pos) {
  auto b = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos + i])); };
  return (b(0) << 24) | (b(1) << 16) | (b(2) << 8) | b(3);
}

void append_chunk(std::string* out, const char type[4], const std::string& payload) {
  append_u32(out, static_cast<std::uint32_t>(payload.size()));
  std::size_t crc_begin = out->size();
  out->append(type, 4);
  out->append(payload);
  std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0, reinterpret_cast<const Bytef*>(out->data() + crc_begin), static_cast<uInt>(out->size() - crc_begin)));
  append_u32(out, crc);
}

std::string zlib_compress(const std::string& raw) {
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::string out(bound, '\0');
  int rc = compress2(reinterpret_cast<Bytef*>(out.data()), &bound,
                     reinterpret_cast<const Bytef*>(raw.data()), static_cast<uLong>(raw.size()),
                     kZlibLevel);
  if (rc != Z_OK) throw DataError("deflate failed with zlib status " + std::to_string(rc));
  out.resize(bound);
  return out;
}

std::string zlib_decompress(const std::string& packed, std::size_t expected) {
  std::string out(expected, '\0');
  uLongf got = static_cast<uLongf>(expected);
  int rc = uncompress(reinterpret_cast<Bytef*>(out.data()), &got,
                      reinterpret_cast<const Bytef*>(packed.data()), static_cast<uLong>(packed.size()));
  if (rc != Z_OK || got != expected) {
    throw DataError("inflate failed or image data has the wrong length");
  }
  return out;
}

int paeth(int a, int b, int c) {
  int p = a + b - c;
  int pa = std::abs(p - a);
  int pb = std::abs(p - b);
  int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

}  // namespace

std::string encode_png(const Image& image) {
  if (image.width <= 0 || image.height <= 0) throw ValidationError("cannot encode an empty image");

  std::string ihdr;
  append_u32(&ihdr, static_cast<std::uint32_t>(image.width));
  append_u32(&ihdr, static_cast<std::uint32_t>(image.height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(0);  // color type: grayscale
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter method
  ihdr.push_back(0);  // interlace

  std::string raw;
  raw.reserve(static_cast<std::size_t>(image.height) * (static_cast<std::size_t>(image.width) + 1));
  for (int y = 0; y < image.height; ++y) {
    raw.push_back(0);  // per-scanline filter type
    raw.append(reinterpret_cast<const char*>(image.pixels.data()) +
                   static_cast<std::size_t>(y) * image.width,
               static_cast<std::size_t>(image.width));
  }

  std::string out(reinterpret_cast<const char*>(kPngSignature), sizeof kPngSignature);
  append_chunk(&out, "IHDR", ihdr);
  append_chunk(&out, "IDAT", zlib_compress(raw));
  append_chunk(&out, "IEND", {});
  return out;
}

Image decode_png(const std::string& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kPngSignature, 8) != 0) {
    throw DataError("not a portable network graphics stream");
  }

  std::size_t pos = 8;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  bool have_header = false;
  std::string idat;
  while (pos + 12 <= bytes.size()) {
    std::uint32_t length = read_u32(bytes, pos);
    if (pos + 12 + length > bytes.size()) throw DataError("truncated chunk");
    std::string type = bytes.substr(pos + 4, 4);
    std::string payload = bytes.substr(pos + 8, length);
    std::uint32_t stored_crc = read_u32(bytes, pos + 8 + length);
    std::uint32_t computed_crc = static_cast<std::uint32_t>(
        crc32(0, reinterpret_cast<const Bytef*>(bytes.data() + pos + 4), length + 4));
    if (stored_crc != computed_crc) {
      throw DataError("checksum mismatch in chunk " + type);
    }
    pos += 12 + length;

    if (type == "IHDR") {
      if (length != 13) throw DataError("malformed header chunk");
      width = read_u32(payload, 0);
      height = read_u32(payload, 4);
      int depth = static_cast<unsigned char>(payload[8]);
      int color = static_cast<unsigned char>(payload[9]);
      int interlace = static_cast<unsigned char>(payload[12]);
      if (depth != 8 || color != 0) {
        throw DataError("unsupported image format: need 8-bit grayscale");
      }
      if (interlace != 0) throw DataError("interlaced images are not supported");
      have_header = true;
    } else if (type == "IDAT") {
      idat += payload;
    } else if (type == "IEND") {
      break;
    }
  }
  if (!have_header || width == 0 || height == 0) throw DataError("image has no header");

  std::size_t stride = width;
  std::string raw = zlib_decompress(idat, (stride + 1) * height);

  Image image(static_cast<int>(width), static_cast<int>(height), 0);
  std::vector<std::uint8_t> prev(stride, 0);
  for (std::uint32_t y = 0; y < height; ++y) {
    const auto* row = reinterpret_cast<const unsigned char*>(raw.data()) + y * (stride + 1);
    int filter = row[0];
    for (std::uint32_t x = 0; x < width; ++x) {
      int value = row[1 + x];
      int left = x > 0 ? image.at(static_cast<int>(x - 1), static_cast<int>(y)) : 0;
      int up = prev[x];
      int up_left = x > 0 ? prev[x - 1] : 0;
      switch (filter) {
        case 0: break;
        case 1: value += left; break;
        case 2: value += up; break;
        case 3: value += (left + up) / 2; break;
        case 4: value += paeth(left, up, up_left); break;
        default: throw DataError("unknown scanline filter " + std::to_string(filter));
      }
      image.at(static_cast<int>(x), static_cast<int>(y)) = static_cast<std::uint8_t>(value & 0xFF);
    }
    for (std::uint32_t x = 0; x < width; ++x) {
      prev[x] = image.at(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return image;
}

void write_png(const std::string& path, const Image& image) {
  detail::write_file(path, encode_png(image));
}

Image read_png(const std::string& path) { return decode_png(detail::read_file(path)); }

std::string encode_patch_tensor(const PatchSequence& sequence, int patch_side) {
  char preamble[17];
  int written = std::snprintf(preamble, sizeof preamble, "P %d %d\n", patch_side, patch_side);
  if (written < 0 || written > 16) throw ValidationError("patch_side too large for the preamble");

  std::string out(preamble, static_cast<std::size_t>(written));
  out.resize(16, '\0');
  for (const Image& patch : sequence.patches) {
    if (patch.width != patch_side || patch.height != patch_side) {
      throw ValidationError("patch dimensions do not match the declared shape");
    }
    out.append(reinterpret_cast<const char*>(patch.pixels.data()), patch.pixels.size());
  }
  return out;
}

void write_patch_tensor(const std::string& path, const PatchSequence& sequence, int patch_side) {
  detail::write_file(path, encode_patch_tensor(sequence, patch_side));
}

}  // namespace aksara
