#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uvlm::dataset {

enum class Weather : std::uint8_t { cloudy, rainy, sunny };
enum class Corner : std::uint8_t { top_left, top_right, bottom_left, bottom_right };
enum class Attribute : std::uint8_t { time, weather, weather_pos, battery, battery_pos };

inline constexpr std::array<Weather, 3> kWeathers{Weather::cloudy, Weather::rainy, Weather::sunny};
inline constexpr std::array<Corner, 4> kCorners{Corner::top_left, Corner::top_right,
                                                Corner::bottom_left, Corner::bottom_right};
inline constexpr std::array<Attribute, 5> kAttributes{Attribute::time, Attribute::weather,
                                                      Attribute::weather_pos, Attribute::battery,
                                                      Attribute::battery_pos};

std::string_view to_string(Weather w);
std::string_view to_string(Corner c);
std::string_view to_string(Attribute a);
std::optional<Weather> parse_weather(std::string_view s);
std::optional<Corner> parse_corner(std::string_view s);
std::optional<Attribute> parse_attribute(std::string_view s);

struct Rgb {
    float r, g, b;
};

inline constexpr int kPaletteSize = 8;

/// Face colours, exact multiples of 1/255 so PNG storage is lossless.
const std::array<Rgb, kPaletteSize>& palette();
Rgb foreground();

struct ClockTime {
    int hour = 0;  // [0, 11]
    int minute = 0;
    int second = 0;
    bool operator==(const ClockTime&) const = default;
};

std::string format_time(const ClockTime& t);  // "HH:MM:SS"

/// Ground truth for one watch face. face_color never appears in any text.
struct WatchFaceSpec {
    int hour = 0;
    int minute = 0;
    int second = 0;
    Weather weather = Weather::cloudy;
    Corner weather_pos = Corner::top_left;
    int battery = 0;  // percent, [0, 100]
    Corner battery_pos = Corner::top_right;
    int face_color = 0;

    ClockTime time() const { return {hour, minute, second}; }
    bool operator==(const WatchFaceSpec&) const = default;
};

/// Throws std::invalid_argument on any out-of-range field or shared corner.
void validate(const WatchFaceSpec& spec);

/// R x R x 3 image, row-major HWC, values in [0, 1].
struct Image {
    int size = 0;
    std::vector<float> pixels;

    Image() = default;
    explicit Image(int r) : size(r), pixels(static_cast<std::size_t>(r) * r * 3, 0.0f) {}

    float& at(int y, int x, int c) { return pixels[(static_cast<std::size_t>(y) * size + x) * 3 + c]; }
    float at(int y, int x, int c) const {
        return pixels[(static_cast<std::size_t>(y) * size + x) * 3 + c];
    }
    bool operator==(const Image&) const = default;
};

struct BiasConfig {
    std::optional<Attribute> biased_attribute;
    double caption_inclusion_prob_for_biased = 0.0;
    double vqa_prob_for_biased = 0.05;
};

/// Throws std::invalid_argument when a probability is outside [0, 1].
void validate(const BiasConfig& bias);

struct VqaSample {
    std::string image_id;
    Attribute attribute = Attribute::time;
    std::string question;
    std::string answer;
};

struct CaptionSample {
    std::string image_id;
    std::vector<Attribute> included_attributes;
    std::string caption;
};

struct GenSample {
    std::string instruction;
    std::vector<Attribute> included_attributes;
    WatchFaceSpec target_spec;
    std::string target_image_id;
};

}  // namespace uvlm::dataset
