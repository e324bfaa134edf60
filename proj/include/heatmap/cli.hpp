#pragma once

#include <iosfwd>

#include "heatmap/render.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

/// Entry point for the `heatmap` tool. Exit codes: 0 success, 1 runtime
/// failure, 2 usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Projected bbox covering all points, padded by `pad_px` pixels on every
/// side at a uniform meters-per-pixel scale for a width x height raster.
Viewport viewport_from_data(const PointSet& points, int width, int height, int pad_px);

}  // namespace heatmap
