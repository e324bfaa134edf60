#include "heatmap/render.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>

#include "heatmap/oracle.hpp"

namespace heatmap {

namespace {

struct CellKeyHash {
  std::size_t operator()(const CellIndex& c) const noexcept {
    const auto x = static_cast<std::uint64_t>(c.cx);
    const auto y = static_cast<std::uint64_t>(c.cy);
    return std::hash<std::uint64_t>{}(x * 0x9E3779B97F4A7C15ULL ^ (y + 0x632BE59BD9B4E019ULL));
  }
};

HeatGrid make_grid(const Viewport& v, int cell) {
  return HeatGrid((v.width() + cell - 1) / cell, (v.height() + cell - 1) / cell, cell);
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string_view to_string(RenderMode mode) {
  switch (mode) {
    case RenderMode::kDirect: return "direct";
    case RenderMode::kIndirect: return "indirect";
    case RenderMode::kHilomap: return "hilomap";
    case RenderMode::kIdw: return "idw";
  }
  return "unknown";
}

RenderMode parse_render_mode(std::string_view name) {
  if (name == "direct") return RenderMode::kDirect;
  if (name == "indirect") return RenderMode::kIndirect;
  if (name == "hilomap") return RenderMode::kHilomap;
  if (name == "idw") return RenderMode::kIdw;
  throw ConfigError("unknown render mode '" + std::string(name) + "'");
}

void validate(const RenderConfig& cfg) {
  if (cfg.stamp.radius < 1) throw ConfigError("radius must be >= 1");
  if (cfg.stamp.blur < 0) throw ConfigError("blur must be >= 0");
  if (cfg.cell_size < 0) throw ConfigError("cell size must be >= 1");
  if (!(cfg.min_opacity >= 0.0 && cfg.min_opacity <= 1.0)) {
    throw ConfigError("min opacity must lie in [0, 1]");
  }
  if (!(cfg.neutral > 0.0 && cfg.neutral < 1.0)) {
    throw ConfigError("neutral weight must lie in (0, 1)");
  }
  if (!(cfg.idw_power > 0.0)) throw ConfigError("IDW power must be > 0");
}

int effective_cell_size(const RenderConfig& cfg) {
  validate(cfg);
  return cfg.cell_size > 0 ? cfg.cell_size : std::max(1, cfg.stamp.radius / 2);
}

std::vector<PixelPoint> project_points(const PointSet& points, const Viewport& v) {
  std::vector<PixelPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const PixelCoord px = project_to_pixel(p, v);
    out.push_back({px.col, px.row, p.weight});
  }
  return out;
}

std::vector<PixelPoint> HeatGrid::representatives() const {
  std::vector<PixelPoint> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back({c.px, c.py, c.weight});
  return out;
}

HeatGrid aggregate_indirect(std::span<const PixelPoint> points, const Viewport& v,
                            const RenderConfig& cfg) {
  const int cell = effective_cell_size(cfg);
  HeatGrid grid = make_grid(v, cell);
  std::unordered_map<CellIndex, std::size_t, CellKeyHash> index;
  auto& cells = grid.cells();

  for (const auto& p : points) {
    const double w = clamp_weight(p.weight);
    const CellIndex key = pixel_to_heatcell(p.col, p.row, cell);
    auto [it, inserted] = index.try_emplace(key, cells.size());
    if (inserted) {
      cells.push_back(CellRep{.cell = key, .px = p.col, .py = p.row});
    }
    CellRep& c = cells[it->second];
    c.sum_w += w;
    c.sum_wx += w * p.col;
    c.sum_wy += w * p.row;
    ++c.count;
  }

  std::erase_if(cells, [](const CellRep& c) { return !(c.sum_w > 0.0); });
  for (auto& c : cells) {
    // A singleton keeps its coordinates verbatim so the aggregation is an
    // exact identity; w * x / w need not round-trip.
    if (c.count > 1) {
      c.px = c.sum_wx / c.sum_w;
      c.py = c.sum_wy / c.sum_w;
    }
    c.weight = c.sum_w;
  }
  return grid;
}

HeatGrid aggregate_indirect(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return aggregate_indirect(std::span<const PixelPoint>(px), v, cfg);
}

HeatGrid aggregate_hilomap(std::span<const PixelPoint> points, const Viewport& v,
                           const RenderConfig& cfg) {
  const int cell = effective_cell_size(cfg);
  HeatGrid grid = make_grid(v, cell);
  std::unordered_map<CellIndex, std::size_t, CellKeyHash> index;
  auto& cells = grid.cells();

  for (const auto& p : points) {
    const double w = clamp_weight(p.weight);
    const CellIndex key = pixel_to_heatcell(p.col, p.row, cell);
    auto [it, inserted] = index.try_emplace(key, cells.size());
    if (inserted) {
      cells.push_back(CellRep{.cell = key, .px = p.col, .py = p.row, .weight = w, .count = 1});
      continue;
    }
    CellRep& c = cells[it->second];
    ++c.count;
    // Strict: on a tie the earlier point stays.
    if (std::abs(w - cfg.neutral) > std::abs(c.weight - cfg.neutral)) {
      c.px = p.col;
      c.py = p.row;
      c.weight = w;
    }
  }
  return grid;
}

HeatGrid aggregate_hilomap(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return aggregate_hilomap(std::span<const PixelPoint>(px), v, cfg);
}

AlphaPlane direct_alpha_plane(std::span<const PixelPoint> points, const Viewport& v,
                              const RenderConfig& cfg, std::size_t* blits) {
  validate(cfg);
  const auto stamp = StampCache::global().get(cfg.stamp);
  AlphaPlane plane(v.width(), v.height());
  std::size_t n = 0;
  for (const auto& p : points) {
    const int col = anchor_pixel(p.col);
    const int row = anchor_pixel(p.row);
    if (!footprint_touches(*stamp, col, row, v.width(), v.height())) continue;
    const double opacity = std::max(clamp_weight(p.weight), cfg.min_opacity);
    blit(plane, *stamp, col, row, opacity, cfg.composite);
    ++n;
  }
  if (blits) *blits += n;
  return plane;
}

RgbaRaster color_direct(const AlphaPlane& plane, const GradientLut& gradient) {
  RgbaRaster out(plane.width(), plane.height());
  for (int y = 0; y < plane.height(); ++y) {
    for (int x = 0; x < plane.width(); ++x) {
      const double a = plane.at(x, y);
      if (!(a > 0.0)) continue;
      const std::uint8_t alpha = quantize_alpha(a);
      const Rgb& c = gradient[alpha];
      out.set(x, y, Rgba{c.r, c.g, c.b, alpha});
    }
  }
  return out;
}

HilomapOpacity hilomap_opacity(double w, double neutral) {
  // Scales the distance to neutral so both ends reach opacity 1; with the
  // default neutral of 0.5 this is (0.5 - w) * 2 and (w - 0.5) * 2.
  if (w <= neutral) {
    return {true, std::clamp((neutral - w) / neutral, 0.0, 1.0)};
  }
  return {false, std::clamp((w - neutral) / (1.0 - neutral), 0.0, 1.0)};
}

HilomapPlanes hilomap_planes(std::span<const PixelPoint> reps, const Viewport& v,
                             const RenderConfig& cfg, std::size_t* blits) {
  validate(cfg);
  const auto stamp = StampCache::global().get(cfg.stamp);
  HilomapPlanes planes{AlphaPlane(v.width(), v.height()), AlphaPlane(v.width(), v.height()),
                       AlphaPlane(v.width(), v.height())};
  std::size_t n = 0;

  auto draw = [&](AlphaPlane& plane, const PixelPoint& p, double opacity) {
    const int col = anchor_pixel(p.col);
    const int row = anchor_pixel(p.row);
    if (!footprint_touches(*stamp, col, row, v.width(), v.height())) return;
    blit(plane, *stamp, col, row, opacity, cfg.composite);
    ++n;
  };

  for (const auto& p : reps) {
    const auto o = hilomap_opacity(clamp_weight(p.weight), cfg.neutral);
    if (o.is_low) draw(planes.low, p, o.opacity);
  }
  for (const auto& p : reps) {
    const auto o = hilomap_opacity(clamp_weight(p.weight), cfg.neutral);
    if (!o.is_low) draw(planes.high, p, o.opacity);
  }
  for (const auto& p : reps) {
    draw(planes.all, p, hilomap_opacity(clamp_weight(p.weight), cfg.neutral).opacity);
  }
  if (blits) *blits += n;
  return planes;
}

std::uint8_t hilomap_color_index(double low, double high) {
  const double alpha_low = 255.0 * low;
  const double alpha_high = 255.0 * high;
  const double w = std::floor(128.0 + (alpha_high - alpha_low) / 2.0 + 0.5);
  return static_cast<std::uint8_t>(std::clamp(w, 0.0, 255.0));
}

RgbaRaster color_hilomap(const HilomapPlanes& planes, const GradientLut& gradient) {
  RgbaRaster out(planes.all.width(), planes.all.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const double a = planes.all.at(x, y);
      if (!(a > 0.0)) continue;
      const Rgb& c = gradient[hilomap_color_index(planes.low.at(x, y), planes.high.at(x, y))];
      out.set(x, y, Rgba{c.r, c.g, c.b, quantize_alpha(a)});
    }
  }
  return out;
}

RenderResult render_direct(std::span<const PixelPoint> points, const Viewport& v,
                           const RenderConfig& cfg) {
  Stopwatch sw;
  RenderResult r;
  r.stats.mode = RenderMode::kDirect;
  r.stats.k = points.size();
  const AlphaPlane plane = direct_alpha_plane(points, v, cfg, &r.stats.blits);
  r.raster = color_direct(plane, cfg.gradient);
  r.stats.ms = sw.elapsed_ms();
  return r;
}

RenderResult render_direct(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return render_direct(std::span<const PixelPoint>(px), v, cfg);
}

RenderResult render_indirect(std::span<const PixelPoint> points, const Viewport& v,
                             const RenderConfig& cfg) {
  Stopwatch sw;
  const HeatGrid grid = aggregate_indirect(points, v, cfg);
  const auto reps = grid.representatives();
  RenderResult r = render_direct(std::span<const PixelPoint>(reps), v, cfg);
  r.stats.mode = RenderMode::kIndirect;
  r.stats.k = points.size();
  r.stats.cells = grid.cells().size();
  r.stats.ms = sw.elapsed_ms();
  return r;
}

RenderResult render_indirect(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return render_indirect(std::span<const PixelPoint>(px), v, cfg);
}

RenderResult render_hilomap(std::span<const PixelPoint> points, const Viewport& v,
                            const RenderConfig& cfg) {
  Stopwatch sw;
  RenderResult r;
  r.stats.mode = RenderMode::kHilomap;
  r.stats.k = points.size();
  const HeatGrid grid = aggregate_hilomap(points, v, cfg);
  r.stats.cells = grid.cells().size();
  const auto reps = grid.representatives();
  const HilomapPlanes planes = hilomap_planes(reps, v, cfg, &r.stats.blits);
  r.raster = color_hilomap(planes, cfg.gradient);
  r.stats.ms = sw.elapsed_ms();
  return r;
}

RenderResult render_hilomap(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  const auto px = project_points(points, v);
  return render_hilomap(std::span<const PixelPoint>(px), v, cfg);
}

RenderResult render(const PointSet& points, const Viewport& v, const RenderConfig& cfg) {
  switch (cfg.mode) {
    case RenderMode::kDirect: return render_direct(points, v, cfg);
    case RenderMode::kIndirect: return render_indirect(points, v, cfg);
    case RenderMode::kHilomap: return render_hilomap(points, v, cfg);
    case RenderMode::kIdw: {
      Stopwatch sw;
      RenderResult r;
      r.stats.mode = RenderMode::kIdw;
      r.stats.k = points.size();
      r.raster = render_idw(points, v, cfg, cfg.idw_power);
      r.stats.ms = sw.elapsed_ms();
      return r;
    }
  }
  throw ConfigError("unknown render mode");
}

}  // namespace heatmap
