#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "heatmap/projection.hpp"

using namespace heatmap;

TEST_CASE("lonlat_to_mercator: reference values") {
  const auto origin = lonlat_to_mercator(0.0, 0.0);
  CHECK(origin.x == 0.0);
  CHECK(origin.y == 0.0);

  // pi * R
  const auto east = lonlat_to_mercator(180.0, 0.0);
  CHECK(east.x == doctest::Approx(20037508.342789244).epsilon(1e-15));

  const auto north = lonlat_to_mercator(0.0, 45.0);
  const auto south = lonlat_to_mercator(0.0, -45.0);
  CHECK(south.y == -north.y);
  // Textbook form R * ln(tan(pi/4 + phi/2)).
  CHECK(north.y == doctest::Approx(kEarthRadius * std::log(std::tan(std::numbers::pi / 4 + std::numbers::pi / 8))).epsilon(1e-14));
  CHECK(north.y > 0.0);
}

TEST_CASE("lonlat_to_mercator: range errors") {
  CHECK_THROWS_AS(lonlat_to_mercator(0.0, 85.1), ProjectionError);
  CHECK_THROWS_AS(lonlat_to_mercator(0.0, -90.0), ProjectionError);
  CHECK_THROWS_AS(lonlat_to_mercator(181.0, 0.0), ProjectionError);
  CHECK_NOTHROW(lonlat_to_mercator(-180.0, -85.06));
}

TEST_CASE("mercator round trip on a lon/lat grid") {
  double worst = 0.0;
  for (int i = 0; i <= 36; ++i) {
    for (int j = 0; j <= 18; ++j) {
      const double lon = -180.0 + 10.0 * i;
      const double lat = -85.0 + (170.0 / 18.0) * j;
      const auto back = mercator_to_lonlat(lonlat_to_mercator(lon, lat));
      worst = std::max({worst, std::abs(back.lon - lon), std::abs(back.lat - lat)});
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("mercator_to_pixel: corners and center") {
  const Viewport v(BBox{-1000.0, -500.0, 3000.0, 1500.0}, 400, 200);
  const auto c = mercator_to_pixel({1000.0, 500.0}, v);
  CHECK(c.col == doctest::Approx(200.0));
  CHECK(c.row == doctest::Approx(100.0));
  const auto tl = mercator_to_pixel({-1000.0, 1500.0}, v);
  CHECK(tl.col == 0.0);
  CHECK(tl.row == 0.0);
  const auto br = mercator_to_pixel({3000.0, -500.0}, v);
  CHECK(br.col == 400.0);
  CHECK(br.row == 200.0);
}

TEST_CASE("mercator_to_pixel is affine and mirrors about the centerline") {
  const Viewport v(BBox{-5e5, -2e5, 5e5, 3e5}, 317, 211);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-7e5, 7e5);
  std::uniform_real_distribution<double> uy(-4e5, 5e5);
  for (int i = 0; i < 200; ++i) {
    const MercatorPoint a{ux(rng), uy(rng)};
    const MercatorPoint b{ux(rng), uy(rng)};
    const auto pa = mercator_to_pixel(a, v);
    const auto pb = mercator_to_pixel(b, v);
    const auto pm = mercator_to_pixel({(a.x + b.x) / 2, (a.y + b.y) / 2}, v);
    CHECK(std::abs(pm.col - (pa.col + pb.col) / 2) < 1e-9);
    CHECK(std::abs(pm.row - (pa.row + pb.row) / 2) < 1e-9);

    const auto mirrored = mercator_to_pixel({-a.x, a.y}, v);
    CHECK(std::abs(mirrored.col - (v.width() - pa.col)) < 1e-9);
    CHECK(mirrored.row == pa.row);
  }
}

TEST_CASE("pixel_to_heatcell: floor arithmetic") {
  CHECK(pixel_to_heatcell(0.0, 0.0, 10) == CellIndex{0, 0});
  CHECK(pixel_to_heatcell(19.9, 10.0, 10) == CellIndex{1, 1});
  CHECK(pixel_to_heatcell(20.0, 20.0, 10) == CellIndex{2, 2});
  CHECK(pixel_to_heatcell(-0.5, -10.0, 10) == CellIndex{-1, -1});
  CHECK_THROWS_AS(pixel_to_heatcell(0.0, 0.0, 0), ConfigError);
}
