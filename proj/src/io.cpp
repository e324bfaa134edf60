#include "heatmap/io.hpp"

#include <png.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <csetjmp>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "detail/strings.hpp"

namespace heatmap {

static_assert(sizeof(Rgba) == 4, "PNG rows alias the raster's pixel storage");

namespace {

using detail::parse_double;
using detail::split;
using detail::trim;

std::string lower_ext(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

void check_location(double lon, double lat, const std::string& where) {
  if (!std::isfinite(lon) || std::abs(lon) > 180.0) {
    throw IngestError(where + "longitude outside [-180, 180]");
  }
  if (!std::isfinite(lat) || std::abs(lat) > kMaxMercatorLat) {
    throw IngestError(where + "latitude outside Web Mercator range");
  }
}

double ingest_weight(double w, const std::string& where, std::size_t& clamped) {
  double c = 0.0;
  try {
    c = clamp_weight(w);
  } catch (const IngestError& e) {
    throw IngestError(where + e.what());
  }
  if (c != w) ++clamped;
  return c;
}

// Iterates non-blank CSV rows, skipping a header, handing each row's fields
// and 1-based line number to fn.
template <typename Fn>
void for_each_csv_row(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  bool first_row = true;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;

    std::vector<std::string_view> fields = split(line, ',');
    for (auto& f : fields) f = trim(f);
    if (first_row) {
      first_row = false;
      if (!parse_double(fields.front())) continue;
    }
    fn(fields, line_no);
  }
}

void png_write_to_vector(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void png_flush_noop(png_structp) {}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "csv") return InputFormat::kCsv;
  if (name == "geojson") return InputFormat::kGeoJson;
  throw ConfigError("unknown input format '" + std::string(name) + "'");
}

RasterFormat parse_raster_format(std::string_view name) {
  if (name == "png") return RasterFormat::kPng;
  if (name == "pam") return RasterFormat::kPam;
  throw ConfigError("unknown raster format '" + std::string(name) + "'");
}

InputFormat input_format_for(const std::filesystem::path& path) {
  const std::string ext = lower_ext(path);
  if (ext == ".geojson" || ext == ".json") return InputFormat::kGeoJson;
  return InputFormat::kCsv;
}

RasterFormat raster_format_for(const std::filesystem::path& path) {
  return lower_ext(path) == ".pam" ? RasterFormat::kPam : RasterFormat::kPng;
}

LoadResult parse_csv_points(std::string_view text) {
  LoadResult result;
  for_each_csv_row(text, [&](const std::vector<std::string_view>& fields, std::size_t line) {
    const std::string where = line_prefix(line);
    if (fields.size() != 3) {
      throw IngestError(where + "expected 3 fields (lon,lat,weight), got " +
                        std::to_string(fields.size()));
    }
    const auto lon = parse_double(fields[0]);
    const auto lat = parse_double(fields[1]);
    const auto w = parse_double(fields[2]);
    if (!lon || !lat || !w) {
      throw IngestError(where + "non-numeric field");
    }
    check_location(*lon, *lat, where);
    result.points.push_back({*lon, *lat, ingest_weight(*w, where, result.clamped)});
  });
  return result;
}

LoadResult parse_geojson_points(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(std::string("invalid GeoJSON: ") + e.what());
  }

  std::vector<const nlohmann::json*> features;
  const std::string type = root.value("type", "");
  if (type == "FeatureCollection") {
    if (!root.contains("features") || !root["features"].is_array()) {
      throw IngestError("FeatureCollection without a features array");
    }
    for (const auto& f : root["features"]) features.push_back(&f);
  } else if (type == "Feature") {
    features.push_back(&root);
  } else {
    throw IngestError("GeoJSON root must be a FeatureCollection or Feature");
  }

  LoadResult result;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& f = *features[i];
    const std::string where = "feature " + std::to_string(i + 1) + ": ";
    if (!f.is_object()) throw IngestError(where + "not an object");

    const auto geom = f.find("geometry");
    if (geom == f.end() || !geom->is_object() || geom->value("type", "") != "Point") {
      ++result.skipped;
      continue;
    }
    const auto coords = geom->find("coordinates");
    if (coords == geom->end() || !coords->is_array() || coords->size() < 2 ||
        !(*coords)[0].is_number() || !(*coords)[1].is_number()) {
      throw IngestError(where + "Point needs numeric [lon, lat] coordinates");
    }
    const auto props = f.find("properties");
    if (props == f.end() || !props->is_object() || !props->contains("weight") ||
        !(*props)["weight"].is_number()) {
      throw IngestError(where + "missing numeric \"weight\" property");
    }
    const double lon = (*coords)[0].get<double>();
    const double lat = (*coords)[1].get<double>();
    check_location(lon, lat, where);
    const double w = ingest_weight((*props)["weight"].get<double>(), where, result.clamped);
    result.points.push_back({lon, lat, w});
  }
  return result;
}

LoadResult load_points(const std::filesystem::path& path, InputFormat format) {
  const std::string text = read_file(path);
  return format == InputFormat::kCsv ? parse_csv_points(text) : parse_geojson_points(text);
}

std::vector<LonLat> parse_locations_csv(std::string_view text) {
  std::vector<LonLat> out;
  for_each_csv_row(text, [&](const std::vector<std::string_view>& fields, std::size_t line) {
    const std::string where = line_prefix(line);
    if (fields.size() < 2) throw IngestError(where + "expected lon,lat");
    const auto lon = parse_double(fields[0]);
    const auto lat = parse_double(fields[1]);
    if (!lon || !lat) throw IngestError(where + "non-numeric field");
    check_location(*lon, *lat, where);
    out.push_back({*lon, *lat});
  });
  return out;
}

std::vector<LonLat> load_locations(const std::filesystem::path& path) {
  return parse_locations_csv(read_file(path));
}

std::string format_points_csv(const PointSet& points) {
  std::string out = "lon,lat,weight\n";
  char buf[64];
  auto append = [&](double v, char sep) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
    out.push_back(sep);
  };
  for (const auto& p : points) {
    append(p.lon, ',');
    append(p.lat, ',');
    append(p.weight, '\n');
  }
  return out;
}

void write_points_csv(const PointSet& points, const std::filesystem::path& path) {
  write_file(path, format_points_csv(points));
}

std::vector<std::uint8_t> encode_pam(const RgbaRaster& raster) {
  const std::string header = "P7\nWIDTH " + std::to_string(raster.width()) + "\nHEIGHT " +
                             std::to_string(raster.height()) +
                             "\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\nENDHDR\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + raster.pixels().size() * 4);
  for (const Rgba& p : raster.pixels()) {
    out.insert(out.end(), {p.r, p.g, p.b, p.a});
  }
  return out;
}

std::vector<std::uint8_t> encode_png(const RgbaRaster& raster) {
  if (raster.width() < 1 || raster.height() < 1) {
    throw IoError("cannot encode an empty raster as PNG");
  }
  std::vector<std::uint8_t> out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(raster.height()));
  for (int y = 0; y < raster.height(); ++y) {
    // libpng takes non-const row pointers but only reads them when writing.
    rows[static_cast<std::size_t>(y)] = const_cast<png_bytep>(
        reinterpret_cast<const png_byte*>(&raster.at(0, y)));
  }

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encoding failed");
  }

  png_set_write_fn(png, &out, png_write_to_vector, png_flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width()),
               static_cast<png_uint_32>(raster.height()), 8, PNG_COLOR_TYPE_RGBA,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void write_raster(const RgbaRaster& raster, const std::filesystem::path& path,
                  RasterFormat format) {
  const auto bytes = format == RasterFormat::kPam ? encode_pam(raster) : encode_png(raster);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace heatmap
