#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatmap {

// Error hierarchy. Everything thrown by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct ProjectionError : Error {
  using Error::Error;
};
struct IngestError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

inline constexpr double kMaxMercatorLat = 85.06;

struct WeightedPoint {
  double lon = 0.0;
  double lat = 0.0;
  double weight = 0.0;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

// Input order is significant: hilomap tie-breaking keeps the first point.
using PointSet = std::vector<WeightedPoint>;

/// Clamps a weight into [0, 1]. Throws IngestError for NaN or infinity.
double clamp_weight(double w);

struct BBox {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

/// Projected-meter bounding box rendered onto a width x height pixel grid.
class Viewport {
 public:
  Viewport(BBox bbox, int width_px, int height_px);

  const BBox& bbox() const { return bbox_; }
  int width() const { return width_; }
  int height() const { return height_; }

  double meters_per_px_x() const { return bbox_.width() / width_; }
  double meters_per_px_y() const { return bbox_.height() / height_; }

 private:
  BBox bbox_;
  int width_;
  int height_;
};

/// Dense row-major plane of real opacity values, each kept in [0, 1].
class AlphaPlane {
 public:
  AlphaPlane() = default;
  AlphaPlane(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  double at(int col, int row) const { return values_[index(col, row)]; }
  double& at(int col, int row) { return values_[index(col, row)]; }

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 0;

  friend bool operator==(const Rgba&, const Rgba&) = default;
};

/// 8-bit RGBA image. Transparent pixels (a == 0) always carry zero color.
class RgbaRaster {
 public:
  RgbaRaster() = default;
  RgbaRaster(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  const Rgba& at(int col, int row) const { return pixels_[index(col, row)]; }

  // Stores px, forcing color to zero when alpha is zero.
  void set(int col, int row, Rgba px);

  const std::vector<Rgba>& pixels() const { return pixels_; }

  friend bool operator==(const RgbaRaster&, const RgbaRaster&) = default;

 private:
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Rgba> pixels_;
};

struct StampParams {
  int radius = 1;
  int blur = 0;

  friend bool operator==(const StampParams&, const StampParams&) = default;
};

/// Quantizes a [0, 1] opacity to a byte with round-half-up.
std::uint8_t quantize_alpha(double a);

}  // namespace heatmap
