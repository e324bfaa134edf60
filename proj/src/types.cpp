#include "heatmap/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace heatmap {

double clamp_weight(double w) {
  if (!std::isfinite(w)) {
    throw IngestError("non-finite weight");
  }
  return std::clamp(w, 0.0, 1.0);
}

Viewport::Viewport(BBox bbox, int width_px, int height_px)
    : bbox_(bbox), width_(width_px), height_(height_px) {
  if (!(bbox.max_x > bbox.min_x) || !(bbox.max_y > bbox.min_y)) {
    throw ConfigError("degenerate viewport bbox");
  }
  if (width_px < 1 || height_px < 1) {
    throw ConfigError("viewport dimensions must be at least 1x1");
  }
}

AlphaPlane::AlphaPlane(int width, int height)
    : width_(width),
      height_(height),
      values_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0.0) {
  if (width < 0 || height < 0) {
    throw ConfigError("negative plane dimensions");
  }
}

RgbaRaster::RgbaRaster(int width, int height)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
  if (width < 0 || height < 0) {
    throw ConfigError("negative raster dimensions");
  }
}

void RgbaRaster::set(int col, int row, Rgba px) {
  if (px.a == 0) {
    px = Rgba{};
  }
  pixels_[index(col, row)] = px;
}

std::uint8_t quantize_alpha(double a) {
  const double scaled = std::floor(255.0 * std::clamp(a, 0.0, 1.0) + 0.5);
  return static_cast<std::uint8_t>(scaled);
}

}  // namespace heatmap
