#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>

#include "heatmap/projection.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

/// Recipe for the low / high / neutral synthetic weight dataset.
///
/// Base locations are split by file position into three groups of
/// floor(k / 3); the remainder joins the last group. Group g draws weights
/// from Normal(means[g], variance) and clamps them to [0, 1].
struct SyntheticSpec {
  std::uint64_t seed = 0;
  std::array<double, 3> means{0.1, 0.9, 0.5};
  double variance = 0.03;
};

/// Sizes of the three groups for k base locations.
std::array<std::size_t, 3> synthetic_group_sizes(std::size_t k);

/// Deterministic standard normal source: std::mt19937_64 feeding a
/// Box-Muller transform (53-bit uniforms, cosine branch only). Unlike
/// std::normal_distribution its output is identical across standard
/// libraries.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform();  // [0, 1)

  std::mt19937_64 engine_;
};

PointSet generate_synthetic(std::span<const LonLat> base, const SyntheticSpec& spec);

}  // namespace heatmap
