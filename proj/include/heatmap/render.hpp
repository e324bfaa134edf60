#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heatmap/gradient.hpp"
#include "heatmap/projection.hpp"
#include "heatmap/stamp.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

enum class RenderMode { kDirect, kIndirect, kHilomap, kIdw };

std::string_view to_string(RenderMode mode);
RenderMode parse_render_mode(std::string_view name);

struct RenderConfig {
  RenderMode mode = RenderMode::kDirect;
  StampParams stamp{};
  GradientLut gradient = build_gradient(heat_stops());
  // 0 selects the default, max(1, radius / 2).
  int cell_size = 0;
  double min_opacity = 0.0;
  double neutral = 0.5;
  CompositeOp composite = CompositeOp::kSourceOver;
  // Only used by the IDW renderer.
  double idw_power = 1.0;
};

/// Resolved heat-grid cell size for cfg; validates the other numeric fields.
int effective_cell_size(const RenderConfig& cfg);
void validate(const RenderConfig& cfg);

/// A point already projected into viewport pixel space.
struct PixelPoint {
  double col = 0.0;
  double row = 0.0;
  double weight = 0.0;

  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

std::vector<PixelPoint> project_points(const PointSet& points, const Viewport& v);

// Representative of one heat-grid cell. For indirect aggregation px/py are
// the weight-averaged coordinates and weight is the weight sum; for hilomap
// they are copied from the selected point.
struct CellRep {
  CellIndex cell;
  double px = 0.0;
  double py = 0.0;
  double weight = 0.0;
  double sum_w = 0.0;
  double sum_wx = 0.0;
  double sum_wy = 0.0;
  std::size_t count = 0;
};

/// Coarse aggregation grid. Only cells that received points are stored, in
/// order of first appearance in the input.
class HeatGrid {
 public:
  HeatGrid(int cols, int rows, int cell_size)
      : cols_(cols), rows_(rows), cell_size_(cell_size) {}

  int cols() const { return cols_; }
  int rows() const { return rows_; }
  int cell_size() const { return cell_size_; }
  const std::vector<CellRep>& cells() const { return cells_; }
  std::vector<CellRep>& cells() { return cells_; }

  std::vector<PixelPoint> representatives() const;

 private:
  int cols_;
  int rows_;
  int cell_size_;
  std::vector<CellRep> cells_;
};

struct RenderStats {
  RenderMode mode = RenderMode::kDirect;
  std::size_t k = 0;
  std::size_t cells = 0;
  std::size_t blits = 0;
  double ms = 0.0;
};

struct RenderResult {
  RgbaRaster raster;
  RenderStats stats;
};

inline std::size_t count_blits(const RenderResult& r) { return r.stats.blits; }

// Aggregation.
HeatGrid aggregate_indirect(std::span<const PixelPoint> points, const Viewport& v,
                            const RenderConfig& cfg);
HeatGrid aggregate_indirect(const PointSet& points, const Viewport& v, const RenderConfig& cfg);
HeatGrid aggregate_hilomap(std::span<const PixelPoint> points, const Viewport& v,
                           const RenderConfig& cfg);
HeatGrid aggregate_hilomap(const PointSet& points, const Viewport& v, const RenderConfig& cfg);

// Direct overlay, step 1: accumulate stamps into an alpha plane. Adds the
// number of blits performed to *blits when non-null.
AlphaPlane direct_alpha_plane(std::span<const PixelPoint> points, const Viewport& v,
                              const RenderConfig& cfg, std::size_t* blits = nullptr);

// Direct overlay, step 2: A = round(255 a), RGB = gradient[A].
RgbaRaster color_direct(const AlphaPlane& plane, const GradientLut& gradient);

struct HilomapPlanes {
  AlphaPlane low;
  AlphaPlane high;
  AlphaPlane all;
};

HilomapPlanes hilomap_planes(std::span<const PixelPoint> reps, const Viewport& v,
                             const RenderConfig& cfg, std::size_t* blits = nullptr);

/// Gradient index for a pixel with low/high plane opacities. Computed as
/// 128 + (255 high - 255 low) / 2, rounded half-up and clamped to [0, 255].
std::uint8_t hilomap_color_index(double low, double high);

RgbaRaster color_hilomap(const HilomapPlanes& planes, const GradientLut& gradient);

/// Opacities used for a hilomap representative of weight w.
struct HilomapOpacity {
  bool is_low = true;
  double opacity = 0.0;
};
HilomapOpacity hilomap_opacity(double w, double neutral);

RenderResult render_direct(std::span<const PixelPoint> points, const Viewport& v,
                           const RenderConfig& cfg);
RenderResult render_direct(const PointSet& points, const Viewport& v, const RenderConfig& cfg);
RenderResult render_indirect(std::span<const PixelPoint> points, const Viewport& v,
                             const RenderConfig& cfg);
RenderResult render_indirect(const PointSet& points, const Viewport& v, const RenderConfig& cfg);
RenderResult render_hilomap(std::span<const PixelPoint> points, const Viewport& v,
                            const RenderConfig& cfg);
RenderResult render_hilomap(const PointSet& points, const Viewport& v, const RenderConfig& cfg);

/// Dispatches on cfg.mode (including IDW).
RenderResult render(const PointSet& points, const Viewport& v, const RenderConfig& cfg);

}  // namespace heatmap
