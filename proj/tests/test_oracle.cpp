#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "doctest.h"
#include "heatmap/oracle.hpp"
#include "support.hpp"

using namespace heatmap;
using heatmap::testing::config;
using heatmap::testing::pixel_viewport;
using heatmap::testing::random_pixel_points;

TEST_CASE("idw: single source is constant") {
  const std::vector<PixelPoint> pts{{3.0, 4.0, 0.37}};
  for (double x : {0.0, 2.5, 100.0}) CHECK(idw_value(pts, x, x * 0.5, 1.0) == 0.37);
}

TEST_CASE("idw: equidistant pair returns the mean") {
  const std::vector<PixelPoint> pts{{10.0, 10.0, 0.2}, {20.0, 10.0, 0.8}};
  CHECK(std::abs(idw_value(pts, 15.0, 10.0, 1.0) - 0.5) < 1e-9);
  CHECK(std::abs(idw_value(pts, 15.0, 37.0, 2.0) - 0.5) < 1e-9);
}

TEST_CASE("idw: coincident pixel takes the point's weight, first one wins") {
  const std::vector<PixelPoint> pts{{5.5, 5.5, 0.7}, {5.5, 5.5, 0.1}, {0.0, 0.0, 1.0}};
  CHECK(idw_value(pts, 5.5, 5.5, 1.0) == 0.7);
}

TEST_CASE("idw: hand-computed three-point value") {
  // Distances 1, 2, 4 from (0,0); weights 1, 0, 0.5.
  const std::vector<PixelPoint> pts{{1, 0, 1.0}, {0, 2, 0.0}, {-4, 0, 0.5}};
  const double expected = (1.0 / 1 + 0.0 / 2 + 0.5 / 4) / (1.0 / 1 + 1.0 / 2 + 1.0 / 4);
  CHECK(idw_value(pts, 0.0, 0.0, 1.0) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("render_idw: empty input is an error") {
  const auto v = pixel_viewport(4, 4);
  CHECK_THROWS_AS(render_idw(std::span<const PixelPoint>(), v, config(RenderMode::kIdw, 1, 0), 1.0),
                  ConfigError);
  CHECK_THROWS_AS(render_idw(PointSet{}, v, config(RenderMode::kIdw, 1, 0)), ConfigError);
}

TEST_CASE("render_idw: opaque everywhere and within the weight hull") {
  std::mt19937_64 rng(8);
  const auto v = pixel_viewport(40, 30);
  const auto cfg = config(RenderMode::kIdw, 1, 0);
  const auto pts = random_pixel_points(rng, 12, 40, 30);
  double lo = 1.0, hi = 0.0;
  for (const auto& p : pts) {
    lo = std::min(lo, p.weight);
    hi = std::max(hi, p.weight);
  }
  const auto r = render_idw(std::span<const PixelPoint>(pts), v, cfg, 1.0);
  for (int y = 0; y < 30; ++y) {
    for (int x = 0; x < 40; ++x) {
      CHECK(r.at(x, y).a == 255);
      const double c = idw_value(pts, x + 0.5, y + 0.5, 1.0);
      CHECK(c >= lo);
      CHECK(c <= hi);
      const Rgb& g = cfg.gradient[quantize_alpha(c)];
      CHECK(Rgb{r.at(x, y).r, r.at(x, y).g, r.at(x, y).b} == g);
    }
  }
}

TEST_CASE("idw: reordering points does not change values") {
  std::mt19937_64 rng(12);
  auto pts = random_pixel_points(rng, 30, 50, 50);
  auto shuffled = pts;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (int i = 0; i < 50; ++i) {
    const double x = i + 0.5, y = 49.5 - i;
    CHECK(std::abs(idw_value(pts, x, y, 1.0) - idw_value(shuffled, x, y, 1.0)) < 1e-12);
  }
}

TEST_CASE("brute_force_overlay_alpha: trivial cases") {
  const auto v = pixel_viewport(16, 16);
  auto cfg = config(RenderMode::kDirect, 3, 0);
  const auto empty = brute_force_overlay_alpha(std::span<const PixelPoint>(), v, cfg);
  for (double a : empty.values()) CHECK(a == 0.0);

  const std::vector<PixelPoint> one{{8.5, 8.5, 1.0}};
  const auto plane = brute_force_overlay_alpha(std::span<const PixelPoint>(one), v, cfg);
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x)
      CHECK(plane.at(x, y) == ((x - 8) * (x - 8) + (y - 8) * (y - 8) <= 9 ? 1.0 : 0.0));

  cfg.composite = CompositeOp::kSaturatingAdd;
  CHECK_THROWS_AS(brute_force_overlay_alpha(std::span<const PixelPoint>(one), v, cfg),
                  ConfigError);
}

TEST_CASE("brute_force_overlay_alpha agrees with render_direct on 50 random points") {
  std::mt19937_64 rng(50);
  const auto v = pixel_viewport(64, 64);
  const auto cfg = config(RenderMode::kDirect, 6, 4);
  const auto pts = random_pixel_points(rng, 50, 64, 64);
  const auto a = brute_force_overlay_alpha(std::span<const PixelPoint>(pts), v, cfg);
  const auto b = direct_alpha_plane(std::span<const PixelPoint>(pts), v, cfg);
  for (std::size_t i = 0; i < a.values().size(); ++i)
    CHECK(std::abs(a.values()[i] - b.values()[i]) < 1e-6);
}

TEST_CASE("idw cost grows with k while indirect blits do not") {
  const auto v = pixel_viewport(64, 64);
  auto cfg = config(RenderMode::kIndirect, 4, 2);
  cfg.cell_size = 16;
  std::mt19937_64 rng(2);
  const auto small = random_pixel_points(rng, 100, 64, 64);
  const auto large = random_pixel_points(rng, 1600, 64, 64);

  auto time_idw = [&](const std::vector<PixelPoint>& pts) {
    const auto t0 = std::chrono::steady_clock::now();
    (void)render_idw(std::span<const PixelPoint>(pts), v, cfg, 1.0);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  const double t_small = time_idw(small);
  const double t_large = time_idw(large);
  CHECK(t_large > 4.0 * t_small);  // 16x the points

  CHECK(count_blits(render_indirect(std::span<const PixelPoint>(small), v, cfg)) <= 16);
  CHECK(count_blits(render_indirect(std::span<const PixelPoint>(large), v, cfg)) <= 16);
}
