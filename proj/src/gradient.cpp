#include "heatmap/gradient.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "detail/strings.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

namespace {

int stop_index(double position) {
  return static_cast<int>(std::floor(255.0 * position + 0.5));
}

std::uint8_t lerp_channel(std::uint8_t a, std::uint8_t b, int offset, int span) {
  const double t = static_cast<double>(offset) / static_cast<double>(span);
  const double v = static_cast<double>(a) + (static_cast<double>(b) - static_cast<double>(a)) * t;
  return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

GradientLut build_gradient(std::vector<ColorStop> stops) {
  if (stops.size() < 2) {
    throw ConfigError("gradient needs at least 2 stops");
  }
  if (stops.front().position != 0.0 || stops.back().position != 1.0) {
    throw ConfigError("gradient stops must start at 0.0 and end at 1.0");
  }
  for (std::size_t i = 1; i < stops.size(); ++i) {
    const double prev = stops[i - 1].position;
    const double cur = stops[i].position;
    if (!(cur > prev) || cur < 0.0 || cur > 1.0) {
      throw ConfigError("gradient stop positions must be strictly increasing within [0, 1]");
    }
    if (stop_index(cur) <= stop_index(prev)) {
      throw ConfigError("gradient stops closer than one table entry");
    }
  }

  GradientLut lut;
  for (std::size_t s = 1; s < stops.size(); ++s) {
    const int lo = stop_index(stops[s - 1].position);
    const int hi = stop_index(stops[s].position);
    const Rgb& a = stops[s - 1].color;
    const Rgb& b = stops[s].color;
    for (int i = lo; i <= hi; ++i) {
      lut.table_[static_cast<std::size_t>(i)] = Rgb{
          lerp_channel(a.r, b.r, i - lo, hi - lo),
          lerp_channel(a.g, b.g, i - lo, hi - lo),
          lerp_channel(a.b, b.b, i - lo, hi - lo),
      };
    }
  }
  lut.stops_ = std::move(stops);
  return lut;
}

const std::vector<ColorStop>& heat_stops() {
  static const std::vector<ColorStop> stops{
      {0.0, {0x00, 0x00, 0xFF}},
      {0.6, {0x00, 0xFF, 0xFF}},
      {0.7, {0x00, 0xFF, 0x00}},
      {0.8, {0xFF, 0xFF, 0x00}},
      {1.0, {0xFF, 0x00, 0x00}},
  };
  return stops;
}

const std::vector<ColorStop>& diverging_stops() {
  static const std::vector<ColorStop> stops{
      {0.0, {0x21, 0x66, 0xAC}},
      {0.5, {0xF7, 0xF7, 0xF7}},
      {1.0, {0xB2, 0x18, 0x2B}},
  };
  return stops;
}

Rgb parse_hex_color(std::string_view hex) {
  if (!hex.empty() && hex.front() == '#') {
    hex.remove_prefix(1);
  }
  if (hex.size() != 6) {
    throw ConfigError("bad color '" + std::string(hex) + "', expected #RRGGBB");
  }
  std::uint8_t channels[3];
  for (int c = 0; c < 3; ++c) {
    const int hi = hex_digit(hex[2 * c]);
    const int lo = hex_digit(hex[2 * c + 1]);
    if (hi < 0 || lo < 0) {
      throw ConfigError("bad color '" + std::string(hex) + "', expected #RRGGBB");
    }
    channels[c] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb{channels[0], channels[1], channels[2]};
}

std::vector<ColorStop> parse_gradient_spec(std::string_view spec) {
  const std::string_view name = detail::trim(spec);
  if (name == "heat") return heat_stops();
  if (name == "diverging") return diverging_stops();

  std::vector<ColorStop> stops;
  for (std::string_view item : detail::split(name, ',')) {
    item = detail::trim(item);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("bad gradient stop '" + std::string(item) + "', expected pos:#RRGGBB");
    }
    const auto pos = detail::parse_double(detail::trim(item.substr(0, colon)));
    if (!pos) {
      throw ConfigError("bad gradient stop position in '" + std::string(item) + "'");
    }
    stops.push_back(ColorStop{*pos, parse_hex_color(detail::trim(item.substr(colon + 1)))});
  }
  return stops;
}

}  // namespace heatmap
