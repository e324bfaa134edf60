#include "heatmap/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace heatmap {

namespace {
constexpr double kCoincident = 1e-9;
}

double idw_value(std::span<const PixelPoint> points, double col, double row, double power) {
  if (points.empty()) {
    throw ConfigError("IDW needs at least one point");
  }
  double num = 0.0;
  double den = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (const auto& p : points) {
    const double w = clamp_weight(p.weight);
    const double d = std::hypot(p.col - col, p.row - row);
    if (d < kCoincident) return w;
    const double inv = power == 1.0 ? 1.0 / d : 1.0 / std::pow(d, power);
    num += w * inv;
    den += inv;
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  // Rounding in the quotient may step just outside the convex hull.
  return std::clamp(num / den, lo, hi);
}

RgbaRaster render_idw(std::span<const PixelPoint> points, const Viewport& v,
                      const RenderConfig& cfg, double power) {
  if (points.empty()) {
    throw ConfigError("IDW needs at least one point");
  }
  if (!(power > 0.0)) {
    throw ConfigError("IDW power must be > 0");
  }
  RgbaRaster out(v.width(), v.height());
  for (int y = 0; y < v.height(); ++y) {
    for (int x = 0; x < v.width(); ++x) {
      const double c = idw_value(points, x + 0.5, y + 0.5, power);
      const Rgb& rgb = cfg.gradient[quantize_alpha(c)];
      out.set(x, y, Rgba{rgb.r, rgb.g, rgb.b, 255});
    }
  }
  return out;
}

RgbaRaster render_idw(const PointSet& points, const Viewport& v, const RenderConfig& cfg,
                      double power) {
  const auto px = project_points(points, v);
  return render_idw(std::span<const PixelPoint>(px), v, cfg, power);
}

AlphaPlane brute_force_overlay_alpha(std::span<const PixelPoint> points, const Viewport& v,
                                     const RenderConfig& cfg) {
  if (cfg.composite != CompositeOp::kSourceOver) {
    throw ConfigError("closed-form overlay oracle requires source-over compositing");
  }
  const Stamp stamp = build_stamp(cfg.stamp);

  struct Anchor {
    int col;
    int row;
    double opacity;
  };
  std::vector<Anchor> anchors;
  anchors.reserve(points.size());
  for (const auto& p : points) {
    anchors.push_back({anchor_pixel(p.col), anchor_pixel(p.row),
                       std::max(clamp_weight(p.weight), cfg.min_opacity)});
  }

  AlphaPlane plane(v.width(), v.height());
  for (int y = 0; y < v.height(); ++y) {
    for (int x = 0; x < v.width(); ++x) {
      double transmit = 1.0;
      for (const auto& a : anchors) {
        transmit *= 1.0 - a.opacity * stamp.at(x - a.col, y - a.row);
      }
      plane.at(x, y) = 1.0 - transmit;
    }
  }
  return plane;
}

AlphaPlane brute_force_overlay_alpha(const PointSet& points, const Viewport& v,
                                     const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return brute_force_overlay_alpha(std::span<const PixelPoint>(px), v, cfg);
}

}  // namespace heatmap
