#pragma once

#include <numbers>

#include "heatmap/types.hpp"

namespace heatmap {

// Spherical Web Mercator.
inline constexpr double kEarthRadius = 6378137.0;
inline constexpr double kMercatorHalfExtent = std::numbers::pi * kEarthRadius;

struct MercatorPoint {
  double x = 0.0;
  double y = 0.0;
};

struct PixelCoord {
  double col = 0.0;
  double row = 0.0;
};

struct CellIndex {
  long cx = 0;
  long cy = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

MercatorPoint lonlat_to_mercator(double lon, double lat);
inline MercatorPoint lonlat_to_mercator(const WeightedPoint& p) {
  return lonlat_to_mercator(p.lon, p.lat);
}

// Inverse of lonlat_to_mercator; returns {lon, lat} in degrees.
struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
};
LonLat mercator_to_lonlat(MercatorPoint q);

/// Maps the viewport bbox linearly onto [0, width] x [0, height]. Row 0 is
/// at max_y. Points outside the bbox map outside that range.
PixelCoord mercator_to_pixel(MercatorPoint q, const Viewport& v);

inline PixelCoord project_to_pixel(const WeightedPoint& p, const Viewport& v) {
  return mercator_to_pixel(lonlat_to_mercator(p), v);
}

CellIndex pixel_to_heatcell(double col, double row, int cell_size);

}  // namespace heatmap
