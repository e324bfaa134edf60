#include "heatmap/synthetic.hpp"

#include <cmath>
#include <numbers>

namespace heatmap {

std::array<std::size_t, 3> synthetic_group_sizes(std::size_t k) {
  const std::size_t third = k / 3;
  return {third, third, k - 2 * third};
}

double NormalSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalSampler::next() {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

PointSet generate_synthetic(std::span<const LonLat> base, const SyntheticSpec& spec) {
  if (base.empty()) {
    throw ConfigError("synthetic generation needs at least one base location");
  }
  if (!(spec.variance >= 0.0)) {
    throw ConfigError("synthetic variance must be >= 0");
  }
  const double sigma = std::sqrt(spec.variance);
  const auto sizes = synthetic_group_sizes(base.size());

  NormalSampler normal(spec.seed);
  PointSet out;
  out.reserve(base.size());
  std::size_t i = 0;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    for (std::size_t n = 0; n < sizes[g]; ++n, ++i) {
      const double w = clamp_weight(spec.means[g] + sigma * normal.next());
      out.push_back({base[i].lon, base[i].lat, w});
    }
  }
  return out;
}

}  // namespace heatmap
