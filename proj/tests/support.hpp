#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "heatmap/render.hpp"
#include "heatmap/types.hpp"

namespace heatmap::testing {

// Pixel-space viewport: 1 projected meter per pixel, origin at the top-left.
inline Viewport pixel_viewport(int width, int height) {
  return Viewport(BBox{0.0, -static_cast<double>(height), static_cast<double>(width), 0.0}, width,
                  height);
}

inline std::vector<PixelPoint> random_pixel_points(std::mt19937_64& rng, std::size_t n, int width,
                                                   int height, double margin = 0.0) {
  std::uniform_real_distribution<double> ux(-margin, width + margin);
  std::uniform_real_distribution<double> uy(-margin, height + margin);
  std::uniform_real_distribution<double> uw(0.0, 1.0);
  std::vector<PixelPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back({ux(rng), uy(rng), uw(rng)});
  return pts;
}

inline RenderConfig config(RenderMode mode, int radius, int blur) {
  RenderConfig cfg;
  cfg.mode = mode;
  cfg.stamp = StampParams{radius, blur};
  return cfg;
}

}  // namespace heatmap::testing
