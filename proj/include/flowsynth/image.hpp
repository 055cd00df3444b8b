#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace flowsynth {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kWhite{255, 255, 255};

// 8-bit RGB raster, row-major, interleaved channels.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, Rgb fill = kWhite) : width(w), height(h) {
    if (w <= 0 || h <= 0)
      throw std::invalid_argument("Image: size must be positive");
    data.resize(static_cast<std::size_t>(w) * h * 3);
    for (std::size_t i = 0; i < data.size(); i += 3) {
      data[i] = fill[0];
      data[i + 1] = fill[1];
      data[i + 2] = fill[2];
    }
  }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }

  std::uint8_t* pixel(int x, int y) {
    return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
  const std::uint8_t* pixel(int x, int y) const {
    return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }

  void set(int x, int y, Rgb c) {
    if (!in_bounds(x, y)) return;
    auto* p = pixel(x, y);
    p[0] = c[0];
    p[1] = c[1];
    p[2] = c[2];
  }

  Rgb get(int x, int y) const {
    const auto* p = pixel(x, y);
    return {p[0], p[1], p[2]};
  }

  // Alpha-blends c over the existing pixel, coverage in [0,1].
  void blend(int x, int y, Rgb c, double coverage) {
    if (!in_bounds(x, y) || coverage <= 0) return;
    const double a = std::min(coverage, 1.0);
    auto* p = pixel(x, y);
    for (int ch = 0; ch < 3; ++ch)
      p[ch] = static_cast<std::uint8_t>(
          std::lround(p[ch] * (1 - a) + c[ch] * a));
  }
};

// Fills [x1,x2) x [y1,y2) in continuous coordinates with pixel-area coverage
// at the fractional borders, clipped to the image.
inline void fill_rect(Image& img, double x1, double y1, double x2, double y2,
                      Rgb c) {
  if (x2 <= x1 || y2 <= y1) return;
  const int px1 = std::max(0, static_cast<int>(std::floor(x1)));
  const int py1 = std::max(0, static_cast<int>(std::floor(y1)));
  const int px2 = std::min(img.width, static_cast<int>(std::ceil(x2)));
  const int py2 = std::min(img.height, static_cast<int>(std::ceil(y2)));
  for (int y = py1; y < py2; ++y) {
    const double cy = std::min<double>(y + 1, y2) - std::max<double>(y, y1);
    for (int x = px1; x < px2; ++x) {
      const double cx = std::min<double>(x + 1, x2) - std::max<double>(x, x1);
      img.blend(x, y, c, cx * cy);
    }
  }
}

// Rectangle outline of the given stroke width, centered on the geometric
// border path.
inline void stroke_rect(Image& img, double x1, double y1, double x2, double y2,
                        double stroke, Rgb c) {
  const double h = stroke / 2;
  fill_rect(img, x1 - h, y1 - h, x2 + h, y1 + h, c);  // top
  fill_rect(img, x1 - h, y2 - h, x2 + h, y2 + h, c);  // bottom
  fill_rect(img, x1 - h, y1 + h, x1 + h, y2 - h, c);  // left
  fill_rect(img, x2 - h, y1 + h, x2 + h, y2 - h, c);  // right
}

// Axis-aligned line segment drawn as a filled rectangle of the given width.
inline void draw_segment(Image& img, double x1, double y1, double x2, double y2,
                         double width, Rgb c) {
  const double h = width / 2;
  if (x1 == x2) {
    fill_rect(img, x1 - h, std::min(y1, y2) - h, x1 + h, std::max(y1, y2) + h,
              c);
  } else if (y1 == y2) {
    fill_rect(img, std::min(x1, x2) - h, y1 - h, std::max(x1, x2) + h, y1 + h,
              c);
  } else {
    throw std::invalid_argument("draw_segment: only axis-aligned segments");
  }
}

// Filled triangle via per-pixel half-plane coverage sampling (3x3 grid).
inline void fill_triangle(Image& img, std::array<double, 2> a,
                          std::array<double, 2> b, std::array<double, 2> d,
                          Rgb c) {
  auto edge = [](const std::array<double, 2>& p, const std::array<double, 2>& q,
                 double x, double y) {
    return (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]);
  };
  const int x1 = std::max(0, static_cast<int>(std::floor(
                                 std::min({a[0], b[0], d[0]}))));
  const int y1 = std::max(0, static_cast<int>(std::floor(
                                 std::min({a[1], b[1], d[1]}))));
  const int x2 = std::min(img.width, static_cast<int>(std::ceil(
                                         std::max({a[0], b[0], d[0]}))));
  const int y2 = std::min(img.height, static_cast<int>(std::ceil(
                                          std::max({a[1], b[1], d[1]}))));
  const double orient = edge(a, b, d[0], d[1]);
  if (orient == 0) return;
  for (int y = y1; y < y2; ++y) {
    for (int x = x1; x < x2; ++x) {
      int hits = 0;
      for (int sy = 0; sy < 3; ++sy) {
        for (int sx = 0; sx < 3; ++sx) {
          const double px = x + (sx + 0.5) / 3;
          const double py = y + (sy + 0.5) / 3;
          const bool inside = edge(a, b, px, py) * orient >= 0 &&
                              edge(b, d, px, py) * orient >= 0 &&
                              edge(d, a, px, py) * orient >= 0;
          hits += inside ? 1 : 0;
        }
      }
      img.blend(x, y, c, hits / 9.0);
    }
  }
}

// Line segment of arbitrary direction, rendered as two triangles with
// endpoints extended by half the stroke width for clean joins.
inline void draw_line(Image& img, double x1, double y1, double x2, double y2,
                      double width, Rgb c) {
  const double dx = x2 - x1, dy = y2 - y1;
  const double len = std::hypot(dx, dy);
  if (len == 0) return;
  const double h = width / 2;
  const double ux = dx / len * h, uy = dy / len * h;
  const double px = -uy, py = ux;
  const std::array<double, 2> a{x1 - ux + px, y1 - uy + py};
  const std::array<double, 2> b{x1 - ux - px, y1 - uy - py};
  const std::array<double, 2> d{x2 + ux - px, y2 + uy - py};
  const std::array<double, 2> e{x2 + ux + px, y2 + uy + py};
  fill_triangle(img, a, b, d, c);
  fill_triangle(img, a, d, e, c);
}

// Bilinear resample with half-pixel center alignment.
inline Image bilinear_resize(const Image& src, int new_w, int new_h) {
  if (new_w <= 0 || new_h <= 0)
    throw std::invalid_argument("bilinear_resize: size must be positive");
  Image dst(new_w, new_h);
  const double sx = static_cast<double>(src.width) / new_w;
  const double sy = static_cast<double>(src.height) / new_h;
  for (int y = 0; y < new_h; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0,
                                 static_cast<double>(src.height - 1));
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < new_w; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0,
                                   static_cast<double>(src.width - 1));
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      auto* out = dst.pixel(x, y);
      for (int ch = 0; ch < 3; ++ch) {
        const double top = src.pixel(x0, y0)[ch] * (1 - wx) +
                           src.pixel(x1, y0)[ch] * wx;
        const double bot = src.pixel(x0, y1)[ch] * (1 - wx) +
                           src.pixel(x1, y1)[ch] * wx;
        out[ch] = static_cast<std::uint8_t>(
            std::lround(top * (1 - wy) + bot * wy));
      }
    }
  }
  return dst;
}

// Pads to exactly (new_w, new_h) with the fill color, content anchored at the
// top-left corner.
inline Image pad_to(const Image& src, int new_w, int new_h, Rgb fill = kWhite) {
  if (new_w < src.width || new_h < src.height)
    throw std::invalid_argument("pad_to: target smaller than source");
  Image dst(new_w, new_h, fill);
  for (int y = 0; y < src.height; ++y) {
    std::copy_n(src.pixel(0, y), static_cast<std::size_t>(src.width) * 3,
                dst.pixel(0, y));
  }
  return dst;
}

// Crops the integer rectangle [x1,x2) x [y1,y2), clamped to the image; the
// result is never empty for a nonempty intersection.
inline Image crop(const Image& src, int x1, int y1, int x2, int y2) {
  x1 = std::clamp(x1, 0, src.width);
  y1 = std::clamp(y1, 0, src.height);
  x2 = std::clamp(x2, 0, src.width);
  y2 = std::clamp(y2, 0, src.height);
  if (x2 <= x1 || y2 <= y1)
    throw std::invalid_argument("crop: empty region");
  Image dst(x2 - x1, y2 - y1);
  for (int y = y1; y < y2; ++y)
    std::copy_n(src.pixel(x1, y), static_cast<std::size_t>(x2 - x1) * 3,
                dst.pixel(0, y - y1));
  return dst;
}

}  // namespace flowsynth
