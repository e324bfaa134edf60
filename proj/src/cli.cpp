#include "heatmap/cli.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "detail/strings.hpp"
#include "heatmap/gradient.hpp"
#include "heatmap/io.hpp"
#include "heatmap/projection.hpp"
#include "heatmap/synthetic.hpp"

namespace heatmap {

namespace {

// Flags shared by `render` and `compare`.
struct ViewOptions {
  std::string input;
  std::string format;
  int radius = 4;
  int blur = 4;
  int cell_size = 0;
  int width = 800;
  int height = 600;
  std::string bbox;
  bool bbox_from_data = false;
  double neutral = 0.5;
  double min_opacity = 0.0;
  std::string composite = "source-over";
  bool stats = false;
};

struct RenderOptions {
  ViewOptions view;
  std::string mode = "direct";
  std::string gradient;
  double idw_power = 1.0;
  std::string out;
  std::string out_format;
};

struct CompareOptions {
  ViewOptions view;
  std::string gradient_direct = "heat";
  std::string gradient_hilomap = "diverging";
  std::string out_direct;
  std::string out_hilomap;
  std::string out_format;
};

struct GenOptions {
  std::string base;
  std::uint64_t seed = 0;
  std::string out;
};

void add_view_options(CLI::App* cmd, ViewOptions& o) {
  cmd->add_option("--input", o.input, "Point file (CSV lon,lat,weight or GeoJSON)")->required();
  cmd->add_option("--format", o.format, "Input format; defaults from the file extension")
      ->check(CLI::IsMember({"csv", "geojson"}));
  cmd->add_option("--radius", o.radius, "Stamp radius in pixels")->capture_default_str();
  cmd->add_option("--blur", o.blur, "Gaussian blur extent in pixels")->capture_default_str();
  cmd->add_option("--cell-size", o.cell_size, "Heat-grid cell size in pixels (0 = radius/2)")
      ->capture_default_str();
  cmd->add_option("--width", o.width, "Raster width in pixels")->capture_default_str();
  cmd->add_option("--height", o.height, "Raster height in pixels")->capture_default_str();
  auto* bbox = cmd->add_option("--bbox", o.bbox, "minx,miny,maxx,maxy in Web Mercator meters");
  auto* from_data =
      cmd->add_flag("--bbox-from-data", o.bbox_from_data, "Fit the bbox to the input points");
  bbox->excludes(from_data);
  cmd->add_option("--neutral", o.neutral, "Hilomap neutral weight")->capture_default_str();
  cmd->add_option("--min-opacity", o.min_opacity, "Opacity floor for direct/indirect draws")
      ->capture_default_str();
  cmd->add_option("--composite", o.composite, "Alpha accumulation rule")
      ->check(CLI::IsMember({"source-over", "saturating-add"}))
      ->capture_default_str();
  cmd->add_flag("--stats", o.stats, "Print render statistics as JSON on stdout");
}

BBox parse_bbox(const std::string& text) {
  const auto parts = detail::split(text, ',');
  if (parts.size() != 4) {
    throw ConfigError("--bbox needs minx,miny,maxx,maxy");
  }
  double v[4];
  for (int i = 0; i < 4; ++i) {
    const auto d = detail::parse_double(detail::trim(parts[static_cast<std::size_t>(i)]));
    if (!d) throw ConfigError("--bbox has a non-numeric value");
    v[i] = *d;
  }
  return {v[0], v[1], v[2], v[3]};
}

LoadResult load_input(const ViewOptions& o, std::ostream& err) {
  const InputFormat fmt = o.format.empty() ? input_format_for(o.input) : parse_input_format(o.format);
  LoadResult loaded = load_points(o.input, fmt);
  if (loaded.clamped > 0) {
    err << "warning: " << loaded.clamped << " weight(s) clamped to [0, 1]\n";
  }
  if (loaded.skipped > 0) {
    err << "warning: " << loaded.skipped << " non-Point feature(s) skipped\n";
  }
  return loaded;
}

Viewport make_viewport(const ViewOptions& o, const PointSet& points) {
  if (!o.bbox.empty()) {
    return Viewport(parse_bbox(o.bbox), o.width, o.height);
  }
  return viewport_from_data(points, o.width, o.height, o.radius + o.blur);
}

RenderConfig base_config(const ViewOptions& o) {
  RenderConfig cfg;
  cfg.stamp = StampParams{o.radius, o.blur};
  cfg.cell_size = o.cell_size;
  cfg.neutral = o.neutral;
  cfg.min_opacity = o.min_opacity;
  cfg.composite =
      o.composite == "saturating-add" ? CompositeOp::kSaturatingAdd : CompositeOp::kSourceOver;
  return cfg;
}

nlohmann::json stats_json(const RenderStats& s) {
  return {{"mode", std::string(to_string(s.mode))},
          {"k", s.k},
          {"cells", s.cells},
          {"blits", s.blits},
          {"ms", s.ms}};
}

void write_output(const RgbaRaster& raster, const std::string& path, const std::string& fmt) {
  write_raster(raster, path, fmt.empty() ? raster_format_for(path) : parse_raster_format(fmt));
}

int run_render(const RenderOptions& o, std::ostream& out, std::ostream& err) {
  const LoadResult loaded = load_input(o.view, err);
  const Viewport v = make_viewport(o.view, loaded.points);

  RenderConfig cfg = base_config(o.view);
  cfg.mode = parse_render_mode(o.mode);
  cfg.idw_power = o.idw_power;
  const std::string gradient =
      !o.gradient.empty() ? o.gradient : (cfg.mode == RenderMode::kHilomap ? "diverging" : "heat");
  cfg.gradient = build_gradient(parse_gradient_spec(gradient));

  const RenderResult result = render(loaded.points, v, cfg);
  write_output(result.raster, o.out, o.out_format);
  if (o.view.stats) out << stats_json(result.stats).dump() << '\n';
  return 0;
}

int run_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  const LoadResult loaded = load_input(o.view, err);
  const Viewport v = make_viewport(o.view, loaded.points);

  RenderConfig direct = base_config(o.view);
  direct.mode = RenderMode::kDirect;
  direct.gradient = build_gradient(parse_gradient_spec(o.gradient_direct));

  RenderConfig hilo = base_config(o.view);
  hilo.mode = RenderMode::kHilomap;
  hilo.gradient = build_gradient(parse_gradient_spec(o.gradient_hilomap));

  const RenderResult a = render(loaded.points, v, direct);
  const RenderResult b = render(loaded.points, v, hilo);
  write_output(a.raster, o.out_direct, o.out_format);
  write_output(b.raster, o.out_hilomap, o.out_format);
  if (o.view.stats) {
    out << stats_json(a.stats).dump() << '\n' << stats_json(b.stats).dump() << '\n';
  }
  return 0;
}

int run_gen(const GenOptions& o, std::ostream& err) {
  const auto base = load_locations(o.base);
  if (base.empty()) {
    throw ConfigError("base location file '" + o.base + "' has no rows");
  }
  const PointSet points = generate_synthetic(base, SyntheticSpec{.seed = o.seed});
  write_points_csv(points, o.out);
  const auto sizes = synthetic_group_sizes(base.size());
  err << "wrote " << points.size() << " points (" << sizes[0] << " low, " << sizes[1]
      << " high, " << sizes[2] << " neutral)\n";
  return 0;
}

}  // namespace

Viewport viewport_from_data(const PointSet& points, int width, int height, int pad_px) {
  if (points.empty()) {
    throw ConfigError("cannot derive a bbox from an empty point set");
  }
  if (width < 1 || height < 1) {
    throw ConfigError("viewport dimensions must be at least 1x1");
  }
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : points) {
    const MercatorPoint q = lonlat_to_mercator(p);
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }

  // Uniform scale: the tighter axis decides meters per pixel.
  const double inner_w = width - 2.0 * pad_px;
  const double inner_h = height - 2.0 * pad_px;
  if (inner_w <= 0.0 || inner_h <= 0.0) {
    throw ConfigError("raster too small for the stamp padding");
  }
  double mpp = std::max((max_x - min_x) / inner_w, (max_y - min_y) / inner_h);
  if (!(mpp > 0.0)) mpp = 1.0;

  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  const double half_w = 0.5 * width * mpp;
  const double half_h = 0.5 * height * mpp;
  return Viewport(BBox{cx - half_w, cy - half_h, cx + half_w, cy + half_h}, width, height);
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point-overlay heatmap renderer (direct, indirect, hilomap, IDW)", "heatmap"};
  app.require_subcommand(1);

  RenderOptions render_opts;
  auto* render_cmd = app.add_subcommand("render", "Render a point file to PNG or PAM");
  add_view_options(render_cmd, render_opts.view);
  render_cmd->add_option("--mode", render_opts.mode, "Renderer")
      ->check(CLI::IsMember({"direct", "indirect", "hilomap", "idw"}))
      ->capture_default_str();
  render_cmd->add_option("--gradient", render_opts.gradient,
                         "heat | diverging | pos:#RRGGBB,... (default depends on mode)");
  render_cmd->add_option("--idw-power", render_opts.idw_power, "IDW distance exponent")
      ->capture_default_str();
  render_cmd->add_option("--out", render_opts.out, "Output raster path")->required();
  render_cmd->add_option("--out-format", render_opts.out_format,
                         "png | pam; defaults from the extension")
      ->check(CLI::IsMember({"png", "pam"}));

  CompareOptions compare_opts;
  auto* compare_cmd =
      app.add_subcommand("compare", "Render a direct heatmap and a hilomap of the same input");
  add_view_options(compare_cmd, compare_opts.view);
  compare_cmd->add_option("--gradient-direct", compare_opts.gradient_direct)
      ->capture_default_str();
  compare_cmd->add_option("--gradient-hilomap", compare_opts.gradient_hilomap)
      ->capture_default_str();
  compare_cmd->add_option("--out-direct", compare_opts.out_direct)->required();
  compare_cmd->add_option("--out-hilomap", compare_opts.out_hilomap)->required();
  compare_cmd->add_option("--out-format", compare_opts.out_format)
      ->check(CLI::IsMember({"png", "pam"}));

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand(
      "gen-synthetic", "Assign low/high/neutral normal weights to a base location file");
  gen_cmd->add_option("--base", gen_opts.base, "CSV of lon,lat locations")->required();
  gen_cmd->add_option("--seed", gen_opts.seed, "mt19937_64 seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_opts.out, "Output CSV (lon,lat,weight)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 2;
  }

  try {
    if (*render_cmd) return run_render(render_opts, out, err);
    if (*compare_cmd) return run_compare(compare_opts, out, err);
    return run_gen(gen_opts, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace heatmap
