#include "heatmap/stamp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace heatmap {

namespace {

std::vector<double> gaussian_kernel(int blur) {
  const double sigma = blur / 2.0;
  std::vector<double> k(static_cast<std::size_t>(2 * blur + 1));
  double sum = 0.0;
  for (int t = -blur; t <= blur; ++t) {
    const double v = std::exp(-(t * t) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(t + blur)] = v;
    sum += v;
  }
  for (double& v : k) v /= sum;
  return k;
}

// One separable pass along rows or columns; samples off the canvas are zero.
std::vector<double> convolve_1d(const std::vector<double>& src, int side,
                                const std::vector<double>& kernel, bool horizontal) {
  const int half = static_cast<int>(kernel.size() / 2);
  std::vector<double> dst(src.size(), 0.0);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      double acc = 0.0;
      for (int t = -half; t <= half; ++t) {
        const int sx = horizontal ? x + t : x;
        const int sy = horizontal ? y : y + t;
        if (sx < 0 || sx >= side || sy < 0 || sy >= side) continue;
        acc += kernel[static_cast<std::size_t>(t + half)] *
               src[static_cast<std::size_t>(sy) * side + static_cast<std::size_t>(sx)];
      }
      dst[static_cast<std::size_t>(y) * side + static_cast<std::size_t>(x)] = acc;
    }
  }
  return dst;
}

}  // namespace

Stamp build_stamp(StampParams params) {
  if (params.radius < 1) {
    throw ConfigError("stamp radius must be >= 1");
  }
  if (params.blur < 0) {
    throw ConfigError("stamp blur must be >= 0");
  }

  Stamp stamp;
  stamp.params_ = params;
  const int e = stamp.extent();
  const int side = stamp.side();
  const long r2 = static_cast<long>(params.radius) * params.radius;

  std::vector<double> img(static_cast<std::size_t>(side) * side, 0.0);
  for (int dy = -e; dy <= e; ++dy) {
    for (int dx = -e; dx <= e; ++dx) {
      if (static_cast<long>(dx) * dx + static_cast<long>(dy) * dy <= r2) {
        img[static_cast<std::size_t>(dy + e) * side + static_cast<std::size_t>(dx + e)] = 1.0;
      }
    }
  }

  if (params.blur > 0) {
    const auto kernel = gaussian_kernel(params.blur);
    img = convolve_1d(convolve_1d(img, side, kernel, true), side, kernel, false);

    // Summation order differs between mirrored offsets; copy the canonical
    // octant (dx >= dy >= 0) so all lattice symmetries hold bit-exactly.
    std::vector<double> sym(img.size());
    for (int dy = -e; dy <= e; ++dy) {
      for (int dx = -e; dx <= e; ++dx) {
        const int a = std::max(std::abs(dx), std::abs(dy));
        const int b = std::min(std::abs(dx), std::abs(dy));
        sym[static_cast<std::size_t>(dy + e) * side + static_cast<std::size_t>(dx + e)] =
            img[static_cast<std::size_t>(b + e) * side + static_cast<std::size_t>(a + e)];
      }
    }
    img = std::move(sym);
  }

  for (double& v : img) v = std::clamp(v, 0.0, 1.0);
  stamp.values_ = std::move(img);
  return stamp;
}

bool footprint_touches(const Stamp& stamp, int col, int row, int width, int height) {
  const int e = stamp.extent();
  return col + e >= 0 && col - e < width && row + e >= 0 && row - e < height;
}

void blit(AlphaPlane& plane, const Stamp& stamp, int col, int row, double opacity,
          CompositeOp op) {
  const int e = stamp.extent();
  const int x0 = std::max(col - e, 0);
  const int x1 = std::min(col + e, plane.width() - 1);
  const int y0 = std::max(row - e, 0);
  const int y1 = std::min(row + e, plane.height() - 1);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double src = opacity * stamp.at(x - col, y - row);
      if (src <= 0.0) continue;
      double& dst = plane.at(x, y);
      if (op == CompositeOp::kSourceOver) {
        dst = std::min(1.0, src + dst * (1.0 - src));
      } else {
        dst = std::min(1.0, dst + src);
      }
    }
  }
}

std::shared_ptr<const Stamp> StampCache::get(StampParams params) {
  std::lock_guard lock(mutex_);
  auto it = stamps_.find(params);
  if (it == stamps_.end()) {
    it = stamps_.emplace(params, std::make_shared<const Stamp>(build_stamp(params))).first;
  }
  return it->second;
}

std::size_t StampCache::size() const {
  std::lock_guard lock(mutex_);
  return stamps_.size();
}

StampCache& StampCache::global() {
  static StampCache cache;
  return cache;
}

}  // namespace heatmap
