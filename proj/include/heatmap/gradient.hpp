#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace heatmap {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct ColorStop {
  double position = 0.0;
  Rgb color;
};

/// 256-entry lookup table mapping an alpha byte (or a hilomap color index)
/// to RGB.
///
/// Stops sit at index round(255 * position) and keep their color exactly;
/// entries in between are per-channel linear interpolations over the index
/// range of the enclosing pair of stops.
class GradientLut {
 public:
  const Rgb& operator[](std::size_t i) const { return table_[i]; }
  const std::array<Rgb, 256>& table() const { return table_; }
  const std::vector<ColorStop>& stops() const { return stops_; }

  friend bool operator==(const GradientLut& a, const GradientLut& b) {
    return a.table_ == b.table_;
  }

 private:
  friend GradientLut build_gradient(std::vector<ColorStop> stops);

  std::array<Rgb, 256> table_{};
  std::vector<ColorStop> stops_;
};

GradientLut build_gradient(std::vector<ColorStop> stops);

/// Low -> high ramp for direct and indirect heatmaps.
const std::vector<ColorStop>& heat_stops();

/// Low -> neutral -> high ramp for hilomap (#2166AC, #F7F7F7, #B2182B).
const std::vector<ColorStop>& diverging_stops();

/// Parses either a preset name ("heat", "diverging") or a comma-separated
/// list of `pos:#RRGGBB` pairs.
std::vector<ColorStop> parse_gradient_spec(std::string_view spec);

Rgb parse_hex_color(std::string_view hex);

}  // namespace heatmap
