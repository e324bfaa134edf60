#pragma once

#include <span>

#include "heatmap/render.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

// Reference renderers. Both are deliberately O(m * n * k).

/// Inverse-distance-weighted value at pixel-space location (col, row):
/// sum(w / d^p) / sum(1 / d^p). A point closer than 1e-9 px short-circuits
/// to its own weight (first such point in input order).
double idw_value(std::span<const PixelPoint> points, double col, double row, double power);

/// Interpolation heatmap: every pixel center is evaluated with idw_value and
/// colored with gradient[round(255 c)] at full opacity.
RgbaRaster render_idw(std::span<const PixelPoint> points, const Viewport& v,
                      const RenderConfig& cfg, double power);
RgbaRaster render_idw(const PointSet& points, const Viewport& v, const RenderConfig& cfg,
                      double power = 1.0);

/// Closed-form source-over accumulation, evaluated per pixel:
/// alpha = 1 - prod_i (1 - opacity_i * stamp_i(pixel)).
AlphaPlane brute_force_overlay_alpha(std::span<const PixelPoint> points, const Viewport& v,
                                     const RenderConfig& cfg);
AlphaPlane brute_force_overlay_alpha(const PointSet& points, const Viewport& v,
                                     const RenderConfig& cfg);

}  // namespace heatmap
