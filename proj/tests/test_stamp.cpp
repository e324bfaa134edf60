#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "heatmap/stamp.hpp"

using namespace heatmap;

namespace {

// Direct (non-separable) 2D convolution of the disc indicator with the
// truncated, renormalized Gaussian. Independent of the separable path.
double convolution_oracle(int radius, int blur, int x, int y) {
  const double sigma = blur / 2.0;
  double norm = 0.0;
  for (int dy = -blur; dy <= blur; ++dy)
    for (int dx = -blur; dx <= blur; ++dx) norm += std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
  double acc = 0.0;
  for (int dy = -blur; dy <= blur; ++dy) {
    for (int dx = -blur; dx <= blur; ++dx) {
      const int sx = x - dx;
      const int sy = y - dy;
      if (sx * sx + sy * sy <= radius * radius) {
        acc += std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma)) / norm;
      }
    }
  }
  return acc;
}

double stamp_sum(const Stamp& s) {
  return std::accumulate(s.values().begin(), s.values().end(), 0.0);
}

}  // namespace

TEST_CASE("build_stamp: hard disc radius 4") {
  const Stamp s = build_stamp({4, 0});
  CHECK(s.side() == 9);
  for (int dy = -4; dy <= 4; ++dy) {
    for (int dx = -4; dx <= 4; ++dx) {
      CHECK(s.at(dx, dy) == (dx * dx + dy * dy <= 16 ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("build_stamp: radius 1 is a plus sign") {
  const Stamp s = build_stamp({1, 0});
  CHECK(s.side() == 3);
  CHECK(s.at(0, 0) == 1.0);
  CHECK(s.at(1, 0) == 1.0);
  CHECK(s.at(-1, 0) == 1.0);
  CHECK(s.at(0, 1) == 1.0);
  CHECK(s.at(0, -1) == 1.0);
  CHECK(s.at(1, 1) == 0.0);
  CHECK(s.at(-1, 1) == 0.0);
  CHECK(s.at(2, 0) == 0.0);
}

TEST_CASE("build_stamp: radius 4 blur 4 matches brute-force convolution") {
  const Stamp s = build_stamp({4, 4});
  CHECK(s.side() == 17);
  // Frozen from an independent Python evaluation of the same convolution.
  CHECK(s.at(0, 0) == doctest::Approx(0.8975228631567098).epsilon(1e-13));
  for (int dy = -8; dy <= 8; ++dy) {
    for (int dx = -8; dx <= 8; ++dx) {
      CHECK(std::abs(s.at(dx, dy) - convolution_oracle(4, 4, dx, dy)) < 1e-12);
    }
  }
  // Rings along the axis decrease strictly and stay positive to the edge.
  for (int d = 1; d <= 8; ++d) {
    CHECK(s.at(d, 0) > 0.0);
    CHECK(s.at(d, 0) < s.at(d - 1, 0));
  }
}

TEST_CASE("build_stamp: invariants over a parameter sweep") {
  for (int radius = 1; radius <= 10; ++radius) {
    for (int blur = 0; blur <= 10; ++blur) {
      const Stamp s = build_stamp({radius, blur});
      const int e = radius + blur;
      const double center = s.at(0, 0);
      for (int dy = -e; dy <= e; ++dy) {
        for (int dx = -e; dx <= e; ++dx) {
          const double v = s.at(dx, dy);
          REQUIRE(v >= 0.0);
          REQUIRE(v <= 1.0);
          REQUIRE(v <= center);
          // Exact under every lattice symmetry.
          REQUIRE(v == s.at(-dx, dy));
          REQUIRE(v == s.at(dx, -dy));
          REQUIRE(v == s.at(dy, dx));
        }
      }
      REQUIRE(s.at(e + 1, 0) == 0.0);
      REQUIRE(s.at(0, -(e + 1)) == 0.0);

      // Normalized kernel: energy preserved up to truncation.
      const double hard = stamp_sum(build_stamp({radius, 0}));
      REQUIRE(std::abs(stamp_sum(s) - hard) <= 0.01 * hard);
    }
  }
}

TEST_CASE("build_stamp: configuration errors") {
  CHECK_THROWS_AS(build_stamp({0, 0}), ConfigError);
  CHECK_THROWS_AS(build_stamp({3, -1}), ConfigError);
}

TEST_CASE("blit: single full-opacity hard disc") {
  AlphaPlane plane(20, 20);
  const Stamp s = build_stamp({4, 0});
  blit(plane, s, 10, 10, 1.0);
  for (int y = 0; y < 20; ++y)
    for (int x = 0; x < 20; ++x)
      CHECK(plane.at(x, y) == s.at(x - 10, y - 10));
}

TEST_CASE("blit: two half-opacity blits give 0.75 under source-over") {
  AlphaPlane plane(20, 20);
  const Stamp s = build_stamp({3, 0});
  blit(plane, s, PixelCoord{10.4, 10.9}, 0.5);
  blit(plane, s, PixelCoord{10.4, 10.9}, 0.5);
  CHECK(plane.at(10, 10) == 0.75);
  CHECK(plane.at(13, 10) == 0.75);
  CHECK(plane.at(14, 10) == 0.0);
}

TEST_CASE("blit: saturating add") {
  AlphaPlane plane(5, 5);
  const Stamp s = build_stamp({1, 0});
  blit(plane, s, 2, 2, 0.5, CompositeOp::kSaturatingAdd);
  blit(plane, s, 2, 2, 0.4, CompositeOp::kSaturatingAdd);
  CHECK(plane.at(2, 2) == doctest::Approx(0.9));
  blit(plane, s, 2, 2, 0.4, CompositeOp::kSaturatingAdd);
  CHECK(plane.at(2, 2) == 1.0);
}

TEST_CASE("blit: zero opacity leaves the plane unchanged") {
  AlphaPlane plane(12, 12);
  const Stamp s = build_stamp({3, 2});
  blit(plane, s, 4, 4, 0.3);
  const auto before = plane.values();
  blit(plane, s, 6, 6, 0.0);
  CHECK(plane.values() == before);
}

TEST_CASE("blit: clipping at every edge") {
  AlphaPlane plane(6, 4);
  const Stamp s = build_stamp({3, 1});
  blit(plane, s, -3, -3, 1.0);
  blit(plane, s, 8, 6, 1.0);
  blit(plane, s, -100, 2, 1.0);
  CHECK(plane.at(0, 0) == s.at(3, 3));
  CHECK(plane.at(5, 3) == s.at(-3, -3));
}

TEST_CASE("blit: order-independent closed form and monotone") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pos(0, 23);
  std::uniform_real_distribution<double> op(0.0, 1.0);
  const Stamp s = build_stamp({4, 3});
  struct Draw {
    int x, y;
    double o;
  };
  std::vector<Draw> draws;
  for (int i = 0; i < 30; ++i) draws.push_back({pos(rng), pos(rng), op(rng)});

  AlphaPlane forward(24, 24);
  for (const auto& d : draws) {
    const auto before = forward.values();
    blit(forward, s, d.x, d.y, d.o);
    for (std::size_t i = 0; i < before.size(); ++i) REQUIRE(forward.values()[i] >= before[i]);
  }
  auto shuffled = draws;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  AlphaPlane permuted(24, 24);
  for (const auto& d : shuffled) blit(permuted, s, d.x, d.y, d.o);

  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 24; ++x) {
      double transmit = 1.0;
      for (const auto& d : draws) transmit *= 1.0 - d.o * s.at(x - d.x, y - d.y);
      CHECK(std::abs(forward.at(x, y) - (1.0 - transmit)) < 1e-9);
      CHECK(std::abs(permuted.at(x, y) - forward.at(x, y)) < 1e-9);
    }
  }
}

TEST_CASE("StampCache builds each parameter set once") {
  StampCache cache;
  const auto a = cache.get({5, 2});
  const auto b = cache.get({5, 2});
  const auto c = cache.get({5, 3});
  CHECK(a.get() == b.get());
  CHECK(a.get() != c.get());
  CHECK(cache.size() == 2);
}
