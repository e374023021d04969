#pragma once

#include <optional>

#include "uvlm/dataset/types.hpp"

namespace uvlm::dataset {

/// Minimum normalised correlation for a glyph match to count as readable.
inline constexpr float kMatchThreshold = 0.8f;

template <typename T>
struct ExtractedField {
    std::optional<T> value;  // nullopt = unreadable
    float confidence = 0.0f;  // in [0, 1]
    bool readable() const { return value.has_value(); }
};

struct Extraction {
    ExtractedField<ClockTime> time;
    ExtractedField<Weather> weather;
    ExtractedField<Corner> weather_pos;
    ExtractedField<int> battery;
    ExtractedField<Corner> battery_pos;
    ExtractedField<int> face_color;

    /// The full spec when every field is readable and consistent.
    std::optional<WatchFaceSpec> spec() const;
};

/// Recovers the attribute tuple from an image by glyph-atlas matching on the
/// renderer layout. Exact on rendered images; nearest-match with per-field
/// confidence on anything else (e.g. decoded generations).
Extraction extract(const Image& image);

}  // namespace uvlm::dataset
