#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowsynth/image.hpp"

namespace flowsynth {

class PngError : public std::runtime_error {
 public:
  explicit PngError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint32_t read_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

inline void append_chunk(std::vector<std::uint8_t>& out, const char* type,
                         const std::uint8_t* data, std::size_t size) {
  put_u32(out, static_cast<std::uint32_t>(size));
  const std::size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data, data + size);
  const auto crc =
      crc32(0, out.data() + start, static_cast<uInt>(out.size() - start));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace detail

inline std::vector<std::uint8_t> encode_png(const Image& img) {
  if (img.width <= 0 || img.height <= 0)
    throw PngError("encode_png: empty image");

  // Raw scanlines: filter byte 0 followed by RGB triples.
  const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
  std::vector<std::uint8_t> raw((stride + 1) * img.height);
  for (int y = 0; y < img.height; ++y) {
    std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
    row[0] = 0;
    std::memcpy(row + 1, img.pixel(0, y), stride);
  }

  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(bound);
  if (compress2(compressed.data(), &bound, raw.data(),
                static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw PngError("encode_png: deflate failed");
  compressed.resize(bound);

  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  std::uint8_t ihdr[13];
  ihdr[0] = static_cast<std::uint8_t>(img.width >> 24);
  ihdr[1] = static_cast<std::uint8_t>(img.width >> 16);
  ihdr[2] = static_cast<std::uint8_t>(img.width >> 8);
  ihdr[3] = static_cast<std::uint8_t>(img.width);
  ihdr[4] = static_cast<std::uint8_t>(img.height >> 24);
  ihdr[5] = static_cast<std::uint8_t>(img.height >> 16);
  ihdr[6] = static_cast<std::uint8_t>(img.height >> 8);
  ihdr[7] = static_cast<std::uint8_t>(img.height);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // truecolor
  ihdr[10] = 0;  // compression
  ihdr[11] = 0;  // filter
  ihdr[12] = 0;  // no interlace
  detail::append_chunk(out, "IHDR", ihdr, sizeof(ihdr));
  detail::append_chunk(out, "IDAT", compressed.data(), compressed.size());
  detail::append_chunk(out, "IEND", nullptr, 0);
  return out;
}

inline void write_png(const Image& img, const std::filesystem::path& path) {
  auto bytes = encode_png(img);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PngError("write_png: cannot open " + path.string());
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw PngError("write_png: short write to " + path.string());
}

inline Image decode_png(const std::vector<std::uint8_t>& bytes) {
  static const std::uint8_t magic[8] = {0x89, 'P', 'N', 'G',
                                        '\r', '\n', 0x1a, '\n'};
  if (bytes.size() < 8 || std::memcmp(bytes.data(), magic, 8) != 0)
    throw PngError("decode_png: not a PNG file");

  int width = 0, height = 0, bit_depth = 0, color_type = 0;
  std::vector<std::uint8_t> idat;
  bool saw_ihdr = false;

  std::size_t pos = 8;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t length = detail::read_u32(bytes.data() + pos);
    if (pos + 12 + length > bytes.size())
      throw PngError("decode_png: truncated chunk");
    const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
    const std::uint8_t* data = bytes.data() + pos + 8;
    if (std::memcmp(type, "IHDR", 4) == 0) {
      width = static_cast<int>(detail::read_u32(data));
      height = static_cast<int>(detail::read_u32(data + 4));
      bit_depth = data[8];
      color_type = data[9];
      if (data[12] != 0) throw PngError("decode_png: interlace unsupported");
      saw_ihdr = true;
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.insert(idat.end(), data, data + length);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      break;
    }
    pos += 12 + length;
  }
  if (!saw_ihdr || width <= 0 || height <= 0)
    throw PngError("decode_png: missing or bad IHDR");
  if (bit_depth != 8)
    throw PngError("decode_png: only 8-bit depth supported");
  int channels;
  switch (color_type) {
    case 0: channels = 1; break;
    case 2: channels = 3; break;
    case 4: channels = 2; break;
    case 6: channels = 4; break;
    default:
      throw PngError("decode_png: palette images unsupported");
  }

  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  std::vector<std::uint8_t> raw((stride + 1) * height);
  uLongf raw_size = static_cast<uLongf>(raw.size());
  if (uncompress(raw.data(), &raw_size, idat.data(),
                 static_cast<uLong>(idat.size())) != Z_OK ||
      raw_size != raw.size())
    throw PngError("decode_png: inflate failed");

  // Undo per-row filters in place.
  auto paeth = [](int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    return pb <= pc ? b : c;
  };
  std::vector<std::uint8_t> pixels(stride * height);
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
    const std::uint8_t filter = row[0];
    const std::uint8_t* src = row + 1;
    std::uint8_t* dst = pixels.data() + static_cast<std::size_t>(y) * stride;
    const std::uint8_t* prev =
        y > 0 ? pixels.data() + static_cast<std::size_t>(y - 1) * stride
              : nullptr;
    for (std::size_t i = 0; i < stride; ++i) {
      const int left = i >= static_cast<std::size_t>(channels)
                           ? dst[i - channels]
                           : 0;
      const int up = prev ? prev[i] : 0;
      const int up_left =
          (prev && i >= static_cast<std::size_t>(channels))
              ? prev[i - channels]
              : 0;
      int value = src[i];
      switch (filter) {
        case 0: break;
        case 1: value += left; break;
        case 2: value += up; break;
        case 3: value += (left + up) / 2; break;
        case 4: value += paeth(left, up, up_left); break;
        default:
          throw PngError("decode_png: unknown filter type");
      }
      dst[i] = static_cast<std::uint8_t>(value);
    }
  }

  Image img(width, height);
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* src = pixels.data() + static_cast<std::size_t>(y) * stride;
    for (int x = 0; x < width; ++x) {
      const std::uint8_t* p = src + static_cast<std::size_t>(x) * channels;
      Rgb c;
      switch (color_type) {
        case 0: c = {p[0], p[0], p[0]}; break;
        case 4: c = {p[0], p[0], p[0]}; break;
        case 2: c = {p[0], p[1], p[2]}; break;
        default: c = {p[0], p[1], p[2]}; break;  // RGBA, alpha dropped
      }
      img.set(x, y, c);
    }
  }
  return img;
}

inline Image read_png(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw PngError("read_png: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return decode_png(bytes);
}

}  // namespace flowsynth
