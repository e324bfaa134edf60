#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "heatmap/projection.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

enum class CompositeOp {
  kSourceOver,     // a' = a_s + a_d * (1 - a_s)
  kSaturatingAdd,  // a' = min(1, a_s + a_d)
};

/// Square kernel of side 2 * (radius + blur) + 1: a disc of the given radius,
/// optionally convolved with a Gaussian (sigma = blur / 2, truncated at
/// +-blur and renormalized). Values lie in [0, 1] and are exactly symmetric
/// under the eight reflections/rotations of the pixel lattice.
class Stamp {
 public:
  const StampParams& params() const { return params_; }
  int extent() const { return params_.radius + params_.blur; }
  int side() const { return 2 * extent() + 1; }

  // Value at offset (dx, dy) from the center; zero outside the footprint.
  double at(int dx, int dy) const {
    const int e = extent();
    if (dx < -e || dx > e || dy < -e || dy > e) return 0.0;
    return values_[static_cast<std::size_t>(dy + e) * static_cast<std::size_t>(side()) +
                   static_cast<std::size_t>(dx + e)];
  }

  const std::vector<double>& values() const { return values_; }

 private:
  friend Stamp build_stamp(StampParams params);

  StampParams params_;
  std::vector<double> values_;
};

Stamp build_stamp(StampParams params);

/// Pixel that holds the stamp center for a real pixel coordinate. Pixel i
/// spans [i, i + 1).
inline int anchor_pixel(double coord) { return static_cast<int>(std::floor(coord)); }

/// True when a stamp anchored at (col, row) can touch the w x h raster.
bool footprint_touches(const Stamp& stamp, int col, int row, int width, int height);

/// Composites opacity * stamp into the plane around pixel (col, row).
/// Off-plane cells are clipped silently.
void blit(AlphaPlane& plane, const Stamp& stamp, int col, int row, double opacity,
          CompositeOp op = CompositeOp::kSourceOver);

inline void blit(AlphaPlane& plane, const Stamp& stamp, PixelCoord center, double opacity,
                 CompositeOp op = CompositeOp::kSourceOver) {
  blit(plane, stamp, anchor_pixel(center.col), anchor_pixel(center.row), opacity, op);
}

/// Process-wide stamp cache keyed on StampParams. Safe for concurrent use.
class StampCache {
 public:
  std::shared_ptr<const Stamp> get(StampParams params);
  std::size_t size() const;

  static StampCache& global();

 private:
  struct Less {
    bool operator()(const StampParams& a, const StampParams& b) const {
      return a.radius != b.radius ? a.radius < b.radius : a.blur < b.blur;
    }
  };

  mutable std::mutex mutex_;
  std::map<StampParams, std::shared_ptr<const Stamp>, Less> stamps_;
};

}  // namespace heatmap
