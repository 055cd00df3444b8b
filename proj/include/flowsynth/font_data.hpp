// Embedded monospace glyph bitmaps for chart text rendering.
// Derived from DejaVu Sans Mono (Bitstream Vera / public license terms),
// rasterized once at 48 px and stored as 1-bit coverage masks.
// Regeneration is not part of the build; this file is checked in as data.
#pragma once

#include <cstdint>

namespace flowsynth::fontdata {

// Nominal rasterization size in pixels; glyph cells share one fixed
// advance (monospace) and a common baseline.
inline constexpr int kBaseSize = 48;
inline constexpr int kCellWidth = 29;
inline constexpr int kCellHeight = 57;
inline constexpr int kAscent = 45;
inline constexpr int kBytesPerRow = 4;
inline constexpr int kGlyphBytes = kBytesPerRow * kCellHeight;

// Covered characters, in vocabulary order.
inline constexpr char kGlyphChars[] = "abcdefghijklmnopqrstuvwxyz0123456789+-*/=<>()%,. :";

inline constexpr unsigned char kGlyphBits[] = {
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,63,192,0,3,255,240,0,
    7,255,252,0,7,255,254,0,7,192,127,0,4,0,31,0,0,0,15,0,
    0,0,15,128,0,0,15,128,0,0,15,128,0,63,255,128,1,255,255,128,
    3,255,255,128,7,255,255,128,15,224,15,128,15,128,15,128,15,0,15,128,
    31,0,15,128,30,0,15,128,30,0,15,128,31,0,31,128,31,0,63,128,
    15,128,127,128,15,192,255,128,7,255,255,128,7,255,239,128,1,255,143,128,
    0,126,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,
    7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,
    7,135,224,0,7,159,248,0,7,191,252,0,7,255,254,0,7,248,63,0,
    7,224,31,0,7,224,15,128,7,192,15,128,7,192,7,128,7,128,7,192,
    7,128,7,192,7,128,7,192,7,128,7,192,7,128,7,192,7,128,7,192,
    7,128,7,192,7,128,7,192,7,128,7,192,7,128,7,192,7,192,7,128,
    7,192,15,128,7,224,15,128,7,224,31,0,7,248,63,0,7,255,254,0,
    7,191,252,0,7,159,248,0,0,7,224,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,3,248,0,0,31,255,0,0,127,255,128,
    0,255,255,128,1,252,7,128,1,248,1,128,3,224,0,128,3,224,0,0,
    7,192,0,0,7,192,0,0,7,192,0,0,7,128,0,0,7,128,0,0,
    7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,192,0,0,
    7,192,0,0,7,192,0,0,3,224,0,0,3,224,0,128,1,248,1,128,
    1,252,7,128,0,255,255,128,0,127,255,0,0,31,254,0,0,3,240,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,
    0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,63,15,0,
    0,255,207,0,1,255,239,0,3,255,255,0,7,224,255,0,7,192,63,0,
    15,128,63,0,15,128,31,0,31,0,31,0,31,0,15,0,31,0,15,0,
    31,0,15,0,30,0,15,0,30,0,15,0,30,0,15,0,30,0,15,0,
    31,0,15,0,31,0,15,0,31,0,15,0,15,0,31,0,15,128,31,0,
    15,128,63,0,7,192,63,0,7,224,255,0,3,255,255,0,1,255,239,0,
    0,255,207,0,0,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,15,224,0,0,127,248,0,0,255,252,0,1,255,254,0,
    3,240,63,0,7,192,15,128,7,128,15,128,15,128,7,128,15,0,7,192,
    31,0,3,192,31,0,3,192,31,255,255,192,31,255,255,192,31,255,255,192,
    31,255,255,192,30,0,0,0,30,0,0,0,31,0,0,0,31,0,0,0,
    15,0,0,0,15,128,0,0,15,192,0,128,7,224,3,128,3,248,31,128,
    1,255,255,128,0,255,255,0,0,127,252,0,0,15,224,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,128,
    0,3,255,128,0,7,255,128,0,7,255,128,0,15,128,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,7,255,255,128,
    7,255,255,128,7,255,255,128,7,255,255,128,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,63,0,0,0,255,207,0,1,255,239,0,3,255,255,0,7,224,255,0,
    7,192,63,0,15,128,31,0,15,128,31,0,31,0,31,0,31,0,15,0,
    31,0,15,0,31,0,15,0,30,0,15,0,30,0,15,0,30,0,15,0,
    31,0,15,0,31,0,15,0,31,0,15,0,31,0,31,0,15,128,31,0,
    15,128,31,0,7,192,63,0,7,224,255,0,3,255,239,0,1,255,239,0,
    0,255,207,0,0,63,15,0,0,0,15,0,0,0,15,0,0,0,31,0,
    0,0,31,0,2,0,62,0,3,192,126,0,3,255,252,0,3,255,248,0,
    1,255,240,0,0,63,128,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,7,128,0,0,7,128,0,0,
    7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,
    7,128,0,0,7,128,0,0,7,131,240,0,7,143,248,0,7,191,252,0,
    7,191,254,0,7,248,63,0,7,224,31,0,7,192,15,0,7,192,15,0,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    3,255,128,0,3,255,128,0,3,255,128,0,3,255,128,0,0,7,128,0,
    0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,
    0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,
    0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,
    0,7,128,0,0,7,128,0,15,255,255,192,15,255,255,192,15,255,255,192,
    15,255,255,192,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,1,255,192,0,1,255,192,0,1,255,192,0,
    1,255,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,7,192,0,0,15,128,0,15,255,128,0,
    15,255,0,0,15,254,0,0,15,248,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,192,0,0,
    3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,
    3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,7,192,
    3,192,15,128,3,192,31,0,3,192,62,0,3,192,124,0,3,192,248,0,
    3,195,240,0,3,199,224,0,3,207,192,0,3,223,128,0,3,255,128,0,
    3,255,128,0,3,255,192,0,3,243,224,0,3,225,240,0,3,193,240,0,
    3,192,248,0,3,192,124,0,3,192,126,0,3,192,62,0,3,192,31,0,
    3,192,15,128,3,192,15,192,3,192,7,192,3,192,3,224,3,192,1,240,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,15,254,0,0,15,254,0,0,15,254,0,0,15,254,0,0,
    0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,31,0,0,0,15,128,0,0,15,255,0,0,7,255,0,
    0,3,255,0,0,0,255,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,120,30,0,28,254,127,128,31,254,255,128,
    31,255,255,192,31,31,199,192,30,15,131,192,30,15,131,192,30,15,131,192,
    30,15,129,224,30,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,
    28,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,
    28,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,
    28,7,129,224,28,7,129,224,28,7,129,224,28,7,129,224,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3,240,0,
    7,143,248,0,7,191,252,0,7,191,254,0,7,248,63,0,7,224,31,0,
    7,192,15,0,7,192,15,0,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,31,192,0,0,127,240,0,1,255,252,0,3,255,254,0,
    3,240,126,0,7,192,31,0,15,192,31,0,15,128,15,128,15,128,15,128,
    15,0,7,128,31,0,7,128,31,0,7,192,31,0,7,192,31,0,7,192,
    31,0,7,192,31,0,7,192,31,0,7,192,31,0,7,128,15,0,7,128,
    15,128,15,128,15,128,15,128,15,192,31,0,7,192,31,0,3,240,126,0,
    3,255,254,0,1,255,252,0,0,127,240,0,0,31,192,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,7,224,0,15,159,248,0,
    15,191,252,0,15,255,254,0,15,248,63,0,15,224,31,0,15,192,15,128,
    15,192,15,128,15,192,7,128,15,128,7,192,15,128,7,192,15,128,7,192,
    15,128,7,192,15,128,7,192,15,128,7,192,15,128,7,192,15,128,7,192,
    15,128,7,192,15,128,7,192,15,192,7,128,15,192,15,128,15,192,15,128,
    15,224,31,0,15,248,63,0,15,255,254,0,15,191,252,0,15,159,248,0,
    15,135,224,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,0,0,
    15,128,0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,63,0,0,0,255,207,128,1,255,239,128,3,255,255,128,7,240,255,128,
    7,192,63,128,15,128,31,128,15,128,31,128,15,128,15,128,15,0,15,128,
    31,0,15,128,31,0,15,128,31,0,15,128,31,0,15,128,31,0,15,128,
    31,0,15,128,31,0,15,128,31,0,15,128,15,0,15,128,15,128,15,128,
    15,128,31,128,15,128,31,128,7,192,63,128,7,240,255,128,3,255,255,128,
    1,255,239,128,0,255,207,128,0,63,15,128,0,0,15,128,0,0,15,128,
    0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,
    0,0,15,128,0,0,15,128,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,63,0,0,248,255,192,0,249,255,224,
    0,251,255,224,0,255,192,224,0,255,0,32,0,254,0,0,0,252,0,0,
    0,252,0,0,0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,
    0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,
    0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,
    0,248,0,0,0,248,0,0,0,248,0,0,0,248,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,31,224,0,
    0,127,252,0,1,255,254,0,3,255,254,0,3,240,30,0,7,192,2,0,
    7,192,0,0,7,128,0,0,7,192,0,0,7,192,0,0,7,224,0,0,
    3,248,0,0,3,255,192,0,1,255,248,0,0,127,252,0,0,7,254,0,
    0,0,126,0,0,0,31,0,0,0,31,0,0,0,15,0,0,0,15,0,
    0,0,31,0,4,0,31,0,7,192,126,0,7,255,254,0,7,255,252,0,
    3,255,240,0,0,63,192,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,
    0,60,0,0,0,60,0,0,31,255,255,0,31,255,255,0,31,255,255,0,
    31,255,255,0,0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,
    0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,
    0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,0,60,0,0,
    0,60,0,0,0,62,0,0,0,62,0,0,0,31,0,0,0,31,255,0,
    0,15,255,0,0,7,255,0,0,1,255,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,7,128,15,128,
    7,128,15,128,7,128,15,128,7,128,15,128,7,128,31,128,7,192,31,128,
    7,192,63,128,3,240,127,128,3,255,239,128,1,255,239,128,0,255,207,128,
    0,63,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,30,0,3,192,30,0,3,192,31,0,7,192,15,0,7,128,
    15,0,15,128,15,128,15,128,7,128,15,0,7,128,31,0,7,192,31,0,
    3,192,30,0,3,192,62,0,3,224,60,0,1,224,60,0,1,240,124,0,
    0,240,120,0,0,240,120,0,0,248,248,0,0,120,240,0,0,120,240,0,
    0,125,240,0,0,61,224,0,0,63,224,0,0,63,192,0,0,31,192,0,
    0,31,192,0,0,31,128,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,240,0,0,120,248,0,0,248,
    120,0,0,240,120,0,0,240,120,0,0,240,120,0,1,240,60,0,1,224,
    60,0,1,224,60,15,1,224,60,15,129,224,62,15,131,192,30,15,131,192,
    30,31,195,192,30,29,195,192,30,29,199,128,15,57,199,128,15,56,231,128,
    15,56,231,128,15,56,231,128,7,112,127,0,7,240,127,0,7,240,127,0,
    7,224,63,0,3,224,62,0,3,224,62,0,3,192,62,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    31,0,7,192,15,128,15,128,7,128,15,0,7,192,31,0,3,224,62,0,
    1,240,124,0,0,240,120,0,0,248,248,0,0,125,240,0,0,63,224,0,
    0,31,192,0,0,31,192,0,0,15,128,0,0,31,192,0,0,31,192,0,
    0,63,224,0,0,125,240,0,0,248,248,0,1,240,120,0,1,240,124,0,
    3,224,62,0,7,192,31,0,15,128,15,0,15,128,15,128,31,0,7,192,
    62,0,3,224,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,30,0,3,224,31,0,3,192,31,0,3,192,
    15,0,7,192,15,128,7,128,7,128,15,128,7,192,15,0,7,192,15,0,
    3,192,31,0,3,224,30,0,1,224,62,0,1,224,60,0,1,240,60,0,
    0,240,124,0,0,248,120,0,0,120,120,0,0,120,240,0,0,124,240,0,
    0,61,240,0,0,61,224,0,0,31,224,0,0,31,224,0,0,31,192,0,
    0,15,192,0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,0,0,
    0,31,0,0,0,31,0,0,0,62,0,0,0,126,0,0,15,252,0,0,
    15,248,0,0,15,240,0,0,15,192,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,255,255,0,
    7,255,255,0,7,255,255,0,7,255,255,0,0,0,31,0,0,0,30,0,
    0,0,60,0,0,0,120,0,0,0,240,0,0,1,240,0,0,3,224,0,
    0,3,192,0,0,7,128,0,0,15,0,0,0,31,0,0,0,62,0,0,
    0,124,0,0,0,120,0,0,0,240,0,0,1,224,0,0,3,224,0,0,
    7,192,0,0,7,255,255,0,7,255,255,0,7,255,255,0,7,255,255,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,31,192,0,0,127,240,0,0,255,248,0,1,255,252,0,
    3,240,126,0,3,224,62,0,7,192,31,0,7,192,31,0,15,128,15,128,
    15,128,15,128,15,128,15,128,15,0,15,128,31,0,7,128,31,0,7,192,
    31,0,7,192,31,0,7,192,31,7,7,192,31,15,135,192,31,31,135,192,
    31,31,135,192,31,15,135,192,31,7,7,192,31,0,7,192,31,0,7,192,
    31,0,7,128,15,0,15,128,15,128,15,128,15,128,15,128,15,128,15,128,
    7,192,31,0,7,192,31,0,3,224,62,0,3,240,126,0,1,255,252,0,
    0,255,248,0,0,127,240,0,0,31,192,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,15,192,0,
    0,255,192,0,3,255,192,0,3,255,192,0,3,243,192,0,3,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,0,3,192,0,
    3,255,255,192,3,255,255,192,3,255,255,192,3,255,255,192,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,127,128,0,7,255,240,0,15,255,248,0,15,255,252,0,15,192,254,0,
    14,0,63,0,8,0,31,0,0,0,31,0,0,0,15,0,0,0,15,128,
    0,0,15,128,0,0,15,0,0,0,31,0,0,0,31,0,0,0,31,0,
    0,0,62,0,0,0,124,0,0,0,124,0,0,0,248,0,0,1,240,0,
    0,3,224,0,0,7,192,0,0,15,192,0,0,31,128,0,0,31,0,0,
    0,62,0,0,0,124,0,0,0,248,0,0,1,240,0,0,3,224,0,0,
    7,192,0,0,15,128,0,0,15,255,255,128,15,255,255,128,15,255,255,128,
    15,255,255,128,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,127,128,0,3,255,240,0,15,255,248,0,
    15,255,252,0,15,128,254,0,12,0,63,0,0,0,31,0,0,0,31,0,
    0,0,15,0,0,0,15,0,0,0,15,0,0,0,31,0,0,0,31,0,
    0,0,62,0,0,0,254,0,0,127,248,0,0,127,240,0,0,127,240,0,
    0,127,252,0,0,0,254,0,0,0,63,0,0,0,31,0,0,0,15,128,
    0,0,15,128,0,0,15,128,0,0,7,128,0,0,7,128,0,0,15,128,
    0,0,15,128,0,0,15,128,16,0,31,128,28,0,63,0,31,128,254,0,
    31,255,254,0,31,255,252,0,7,255,240,0,0,255,128,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,252,0,0,0,252,0,0,1,252,0,0,3,252,0,0,3,252,0,
    0,7,252,0,0,15,124,0,0,14,124,0,0,30,124,0,0,28,124,0,
    0,60,124,0,0,120,124,0,0,112,124,0,0,240,124,0,1,224,124,0,
    1,224,124,0,3,192,124,0,7,128,124,0,7,128,124,0,15,0,124,0,
    15,0,124,0,30,0,124,0,60,0,124,0,63,255,255,224,63,255,255,224,
    63,255,255,224,63,255,255,224,0,0,124,0,0,0,124,0,0,0,124,0,
    0,0,124,0,0,0,124,0,0,0,124,0,0,0,124,0,0,0,124,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,7,255,254,0,7,255,254,0,7,255,254,0,
    7,255,254,0,7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,
    7,128,0,0,7,128,0,0,7,128,0,0,7,128,0,0,7,191,128,0,
    7,255,240,0,7,255,248,0,7,255,252,0,7,1,254,0,4,0,127,0,
    0,0,63,0,0,0,31,0,0,0,15,128,0,0,15,128,0,0,15,128,
    0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,0,0,15,128,
    0,0,31,0,16,0,31,0,28,0,126,0,31,129,254,0,31,255,252,0,
    31,255,248,0,15,255,224,0,0,255,128,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,7,248,0,0,63,254,0,
    0,127,254,0,0,255,254,0,1,252,6,0,3,240,0,0,7,224,0,0,
    7,192,0,0,7,128,0,0,15,128,0,0,15,128,0,0,15,0,0,0,
    15,0,0,0,31,15,224,0,31,63,248,0,31,127,252,0,31,255,254,0,
    31,240,127,0,31,224,31,0,31,192,15,128,31,128,15,128,31,128,7,128,
    31,128,7,192,31,0,7,192,31,0,7,192,15,0,7,192,15,0,7,192,
    15,128,7,192,15,128,7,128,7,128,15,128,7,192,15,128,7,224,31,0,
    3,240,127,0,1,255,254,0,0,255,252,0,0,127,248,0,0,31,192,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,31,255,255,128,31,255,255,128,31,255,255,128,31,255,255,128,
    0,0,15,0,0,0,31,0,0,0,31,0,0,0,30,0,0,0,62,0,
    0,0,60,0,0,0,124,0,0,0,124,0,0,0,120,0,0,0,248,0,
    0,0,248,0,0,1,240,0,0,1,240,0,0,1,224,0,0,3,224,0,
    0,3,224,0,0,3,192,0,0,7,192,0,0,7,192,0,0,15,128,0,
    0,15,128,0,0,15,0,0,0,31,0,0,0,31,0,0,0,62,0,0,
    0,62,0,0,0,60,0,0,0,124,0,0,0,124,0,0,0,248,0,0,
    0,248,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,31,192,0,0,255,248,0,1,255,252,0,
    3,255,254,0,7,240,127,0,7,192,31,0,15,128,15,128,15,128,15,128,
    15,128,15,128,15,128,15,128,15,128,15,128,15,128,15,128,7,128,15,0,
    7,192,31,0,3,240,126,0,1,255,252,0,0,127,240,0,0,255,240,0,
    1,255,252,0,3,240,126,0,7,192,31,0,15,128,15,128,15,0,15,128,
    31,0,7,128,31,0,7,192,31,0,7,192,31,0,7,192,31,0,7,192,
    31,0,7,192,31,128,15,128,15,128,15,128,15,192,31,128,7,240,127,0,
    7,255,254,0,3,255,252,0,0,255,248,0,0,63,192,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,63,192,0,
    0,255,240,0,1,255,248,0,3,255,252,0,7,224,126,0,15,192,62,0,
    15,128,31,0,15,0,15,0,31,0,15,128,31,0,15,128,31,0,15,128,
    31,0,15,128,31,0,15,128,31,0,15,128,31,0,15,128,31,0,15,192,
    15,0,15,192,15,128,31,192,15,192,63,192,7,224,127,192,3,255,247,192,
    3,255,247,192,0,255,199,128,0,63,7,128,0,0,7,128,0,0,7,128,
    0,0,15,128,0,0,15,0,0,0,31,0,0,0,31,0,0,0,62,0,
    0,0,126,0,3,1,252,0,3,255,248,0,3,255,240,0,3,255,224,0,
    0,255,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    63,255,255,224,63,255,255,224,63,255,255,224,63,255,255,224,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,15,0,0,0,15,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,248,0,
    0,255,248,0,0,255,248,0,0,255,248,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,7,0,0,0,7,0,0,0,7,0,0,0,7,0,0,4,7,1,0,
    15,7,7,128,15,135,15,128,3,231,62,0,0,255,248,0,0,63,224,0,
    0,31,192,0,0,31,192,0,0,63,224,0,0,255,248,0,3,231,62,0,
    15,135,15,128,15,7,7,128,4,7,1,0,0,7,0,0,0,7,0,0,
    0,7,0,0,0,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,128,0,0,15,128,
    0,0,15,0,0,0,31,0,0,0,30,0,0,0,62,0,0,0,60,0,
    0,0,124,0,0,0,120,0,0,0,248,0,0,0,240,0,0,1,240,0,
    0,1,224,0,0,3,224,0,0,3,192,0,0,3,192,0,0,7,192,0,
    0,7,128,0,0,15,128,0,0,15,0,0,0,31,0,0,0,30,0,0,
    0,62,0,0,0,60,0,0,0,124,0,0,0,120,0,0,0,248,0,0,
    0,240,0,0,1,240,0,0,1,224,0,0,3,224,0,0,3,192,0,0,
    7,192,0,0,7,128,0,0,7,128,0,0,15,128,0,0,15,0,0,0,
    31,0,0,0,30,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,63,255,255,224,63,255,255,224,
    63,255,255,224,63,255,255,224,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,63,255,255,224,63,255,255,224,
    63,255,255,224,63,255,255,224,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,32,0,0,1,224,0,0,15,224,0,0,63,224,0,1,255,192,
    0,7,254,0,0,63,248,0,1,255,192,0,7,254,0,0,63,240,0,0,
    63,192,0,0,63,0,0,0,63,192,0,0,63,240,0,0,7,254,0,0,
    1,255,192,0,0,63,248,0,0,7,254,0,0,1,255,192,0,0,63,224,
    0,0,15,224,0,0,1,224,0,0,0,32,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,32,0,0,0,60,0,0,0,63,128,0,0,
    63,224,0,0,31,252,0,0,3,255,0,0,0,255,224,0,0,31,248,0,
    0,3,255,0,0,0,127,192,0,0,31,224,0,0,7,224,0,0,31,224,
    0,0,127,192,0,3,255,0,0,31,248,0,0,255,224,0,3,255,0,0,
    31,252,0,0,63,224,0,0,63,128,0,0,60,0,0,0,32,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,112,0,0,0,240,0,0,0,224,0,0,1,224,0,0,3,192,0,
    0,3,192,0,0,7,192,0,0,7,128,0,0,7,128,0,0,15,0,0,
    0,15,0,0,0,15,0,0,0,31,0,0,0,30,0,0,0,30,0,0,
    0,30,0,0,0,62,0,0,0,62,0,0,0,62,0,0,0,62,0,0,
    0,62,0,0,0,62,0,0,0,62,0,0,0,62,0,0,0,62,0,0,
    0,62,0,0,0,62,0,0,0,30,0,0,0,30,0,0,0,30,0,0,
    0,31,0,0,0,15,0,0,0,15,0,0,0,15,128,0,0,7,128,0,
    0,7,128,0,0,7,192,0,0,3,192,0,0,3,192,0,0,1,224,0,
    0,0,224,0,0,0,240,0,0,0,112,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,240,0,0,0,120,0,0,0,56,0,0,
    0,60,0,0,0,60,0,0,0,30,0,0,0,30,0,0,0,15,0,0,
    0,15,0,0,0,15,128,0,0,7,128,0,0,7,128,0,0,7,192,0,
    0,7,192,0,0,3,192,0,0,3,192,0,0,3,224,0,0,3,224,0,
    0,3,224,0,0,3,224,0,0,3,224,0,0,3,224,0,0,3,224,0,
    0,3,224,0,0,3,224,0,0,3,224,0,0,3,224,0,0,3,192,0,
    0,3,192,0,0,7,192,0,0,7,192,0,0,7,128,0,0,7,128,0,
    0,15,128,0,0,15,0,0,0,15,0,0,0,30,0,0,0,30,0,0,
    0,60,0,0,0,60,0,0,0,120,0,0,0,120,0,0,0,240,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,3,224,0,0,15,248,0,0,31,252,0,0,60,62,0,0,
    120,30,0,0,112,14,0,0,112,15,0,0,112,7,0,0,112,15,0,0,
    112,14,0,0,120,30,0,0,60,62,0,96,31,252,3,224,15,248,15,192,
    3,224,127,0,0,1,248,0,0,15,224,0,0,63,0,0,1,252,0,0,
    7,224,62,0,31,128,255,128,60,1,255,192,16,3,225,224,0,3,128,224,
    0,7,128,240,0,7,0,112,0,7,0,112,0,7,0,112,0,7,128,240,
    0,3,128,240,0,3,225,224,0,1,255,192,0,0,255,128,0,0,62,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,15,192,0,0,15,192,0,0,15,192,0,0,15,192,0,0,15,192,0,
    0,15,128,0,0,31,128,0,0,31,0,0,0,31,0,0,0,30,0,0,
    0,62,0,0,0,60,0,0,0,60,0,0,0,56,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,31,128,0,0,31,128,0,0,31,128,0,
    0,31,128,0,0,31,128,0,0,31,128,0,0,31,128,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,31,128,0,0,31,128,0,
    0,31,128,0,0,31,128,0,0,31,128,0,0,31,128,0,0,31,128,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,31,128,0,0,31,128,0,0,31,128,0,0,31,128,0,
    0,31,128,0,0,31,128,0,0,31,128,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
    0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,
};

static_assert(sizeof(kGlyphBits) == 50 * kGlyphBytes);

}  // namespace flowsynth::fontdata
