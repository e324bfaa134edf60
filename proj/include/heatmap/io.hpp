#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "heatmap/projection.hpp"
#include "heatmap/types.hpp"

namespace heatmap {

enum class InputFormat { kCsv, kGeoJson };
enum class RasterFormat { kPng, kPam };

InputFormat parse_input_format(std::string_view name);
RasterFormat parse_raster_format(std::string_view name);
// Picks a format from the file extension (.csv/.geojson/.json, .png/.pam).
InputFormat input_format_for(const std::filesystem::path& path);
RasterFormat raster_format_for(const std::filesystem::path& path);

struct LoadResult {
  PointSet points;
  std::size_t clamped = 0;  // weights pulled back into [0, 1]
  std::size_t skipped = 0;  // non-Point GeoJSON features
};

/// CSV rows are `lon,lat,weight`. A first row whose leading field is not
/// numeric is treated as a header. Errors carry the 1-based line number.
LoadResult parse_csv_points(std::string_view text);

/// FeatureCollection (or a single Feature) of Point geometries with a numeric
/// "weight" property. Other geometry types are skipped and counted.
LoadResult parse_geojson_points(std::string_view text);

LoadResult load_points(const std::filesystem::path& path, InputFormat format);

/// Locations only: rows of `lon,lat[,...]`, header optional.
std::vector<LonLat> load_locations(const std::filesystem::path& path);
std::vector<LonLat> parse_locations_csv(std::string_view text);

/// Writes `lon,lat,weight` with a header, using shortest round-trip decimal
/// formatting so a reload reproduces every value exactly.
std::string format_points_csv(const PointSet& points);
void write_points_csv(const PointSet& points, const std::filesystem::path& path);

/// Netpbm P7 with TUPLTYPE RGB_ALPHA, header followed by row-major RGBA bytes.
std::vector<std::uint8_t> encode_pam(const RgbaRaster& raster);
/// 8-bit RGBA, non-interlaced, no ancillary chunks.
std::vector<std::uint8_t> encode_png(const RgbaRaster& raster);

void write_raster(const RgbaRaster& raster, const std::filesystem::path& path,
                  RasterFormat format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace heatmap
