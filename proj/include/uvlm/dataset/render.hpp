#pragma once

// Rule-based watch-face renderer and its layout constants.
//
// Layout on the 64 px base canvas (8 px cells, 8 x 8 grid):
//   corner blocks : 2 x 2 cells (16 x 16 px) in each corner
//   time block    : cell rows 3-4, one cell column per character of HH:MM:SS
//   battery block : [hundreds][tens] / [units][%], blank leading digits
// Larger resolutions are integer nearest-neighbour upscales of the base canvas.

#include <array>
#include <cstdint>
#include <vector>

#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

inline constexpr int kBaseResolution = 64;
inline constexpr int kBaseCell = 8;
inline constexpr int kCornerCells = 2;
inline constexpr int kTimeCellRow = 3;  // digits span cell rows 3 and 4
inline constexpr int kTimeGlyphTop = 26;
inline constexpr int kTimeGlyphWidth = 6;
inline constexpr int kTimeGlyphHeight = 12;
inline constexpr int kSmallGlyph = 8;   // battery digits and percent sign
inline constexpr int kWeatherGlyph = 16;

/// Binary bitmap, row-major, 1 = ink.
struct Glyph {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;
    std::uint8_t at(int y, int x) const { return bits[static_cast<std::size_t>(y) * width + x]; }
};

const Glyph& time_digit_glyph(int digit);     // 6 x 12
const Glyph& small_digit_glyph(int digit);    // 8 x 8 cell, glyph at columns 1-6
const Glyph& percent_glyph();                 // 8 x 8
const Glyph& colon_cell_glyph();              // 8 x 16 full cell column
const Glyph& weather_glyph(Weather w);        // 16 x 16

/// Top-left pixel of a corner block on the base canvas.
struct PixelOrigin {
    int y;
    int x;
};
PixelOrigin corner_origin(Corner c);

/// Throws std::invalid_argument if the resolution is not a positive multiple
/// of the base canvas, or if the spec is out of range.
Image render(const WatchFaceSpec& spec, int resolution = kBaseResolution);

/// Token-grid cells (row-major, ascending) covering the weather glyph when it
/// sits in `corner`, for a G x G token grid over the image.
std::vector<int> weather_token_indices(Corner corner, int grid_size);

}  // namespace uvlm::dataset
