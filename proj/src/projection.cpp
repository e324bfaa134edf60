#include "heatmap/projection.hpp"

#include <cmath>
#include <string>

namespace heatmap {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
}  // namespace

MercatorPoint lonlat_to_mercator(double lon, double lat) {
  if (!std::isfinite(lat) || std::abs(lat) > kMaxMercatorLat) {
    throw ProjectionError("latitude " + std::to_string(lat) + " outside Web Mercator range");
  }
  if (!std::isfinite(lon) || std::abs(lon) > 180.0) {
    throw ProjectionError("longitude " + std::to_string(lon) + " outside [-180, 180]");
  }
  const double x = kEarthRadius * lon * kDegToRad;
  // R * ln(tan(pi/4 + phi/2)) rewritten as R * asinh(tan(phi)): exact at the
  // equator and odd in latitude.
  const double y = kEarthRadius * std::asinh(std::tan(lat * kDegToRad));
  return {x, y};
}

LonLat mercator_to_lonlat(MercatorPoint q) {
  const double lon = q.x / kEarthRadius * kRadToDeg;
  const double lat = std::atan(std::sinh(q.y / kEarthRadius)) * kRadToDeg;
  return {lon, lat};
}

PixelCoord mercator_to_pixel(MercatorPoint q, const Viewport& v) {
  const BBox& b = v.bbox();
  const double col = (q.x - b.min_x) / b.width() * v.width();
  const double row = (b.max_y - q.y) / b.height() * v.height();
  return {col, row};
}

CellIndex pixel_to_heatcell(double col, double row, int cell_size) {
  if (cell_size < 1) {
    throw ConfigError("cell size must be >= 1");
  }
  return {static_cast<long>(std::floor(col / cell_size)),
          static_cast<long>(std::floor(row / cell_size))};
}

}  // namespace heatmap
