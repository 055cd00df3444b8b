#pragma once

#include <cstring>
#include <string>

#include "flowsynth/font_data.hpp"
#include "flowsynth/image.hpp"

namespace flowsynth {

// Text metrics and drawing for the embedded monospace face. `size` is the
// nominal font size in pixels; glyph cells scale linearly from the base size.
namespace font {

inline int glyph_index(char c) {
  const char* p = std::strchr(fontdata::kGlyphChars, c);
  return (p && *p) ? static_cast<int>(p - fontdata::kGlyphChars) : -1;
}

inline double scale_for(double size) { return size / fontdata::kBaseSize; }

inline double advance(double size) {
  return fontdata::kCellWidth * scale_for(size);
}

inline double text_width(const std::string& text, double size) {
  return static_cast<double>(text.size()) * advance(size);
}

inline double text_height(double size) {
  return fontdata::kCellHeight * scale_for(size);
}

namespace detail {

inline bool glyph_bit(int glyph, int gx, int gy) {
  if (gx < 0 || gx >= fontdata::kCellWidth || gy < 0 ||
      gy >= fontdata::kCellHeight)
    return false;
  const std::size_t offset =
      static_cast<std::size_t>(glyph) * fontdata::kGlyphBytes +
      static_cast<std::size_t>(gy) * fontdata::kBytesPerRow + gx / 8;
  return (fontdata::kGlyphBits[offset] >> (7 - gx % 8)) & 1;
}

// Draws one glyph with its cell's top-left corner at (x, y), area-sampling
// the scaled mask on a 3x3 subpixel grid.
inline void draw_glyph(Image& img, int glyph, double x, double y, double size,
                       Rgb color) {
  const double s = scale_for(size);
  const double w = fontdata::kCellWidth * s;
  const double h = fontdata::kCellHeight * s;
  const int px1 = std::max(0, static_cast<int>(std::floor(x)));
  const int py1 = std::max(0, static_cast<int>(std::floor(y)));
  const int px2 = std::min(img.width, static_cast<int>(std::ceil(x + w)));
  const int py2 = std::min(img.height, static_cast<int>(std::ceil(y + h)));
  for (int py = py1; py < py2; ++py) {
    for (int px = px1; px < px2; ++px) {
      int hits = 0;
      for (int sy = 0; sy < 3; ++sy) {
        for (int sx = 0; sx < 3; ++sx) {
          const double fx = (px + (sx + 0.5) / 3 - x) / s;
          const double fy = (py + (sy + 0.5) / 3 - y) / s;
          hits += glyph_bit(glyph, static_cast<int>(std::floor(fx)),
                            static_cast<int>(std::floor(fy)))
                      ? 1
                      : 0;
        }
      }
      img.blend(px, py, color, hits / 9.0);
    }
  }
}

}  // namespace detail

// Draws `text` with the top-left corner of the first cell at (x, y).
inline void draw_text(Image& img, double x, double y, const std::string& text,
                      double size, Rgb color) {
  double cx = x;
  for (char c : text) {
    const int glyph = glyph_index(c);
    if (glyph >= 0) detail::draw_glyph(img, glyph, cx, y, size, color);
    cx += advance(size);
  }
}

}  // namespace font
}  // namespace flowsynth
