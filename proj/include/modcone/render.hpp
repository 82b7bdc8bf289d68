#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcone/cone.hpp"
#include "modcone/function.hpp"
#include "modcone/ray_oracle.hpp"

namespace modcone {

/// Axis-aligned rectangle of the complex plane sampled on a pixel grid.
/// Pixel (col, row) sits at re = cx - hw + col * 2hw/(w-1) and
/// im = cy + hh - row * 2hh/(h-1); row 0 is the top edge.
struct RasterWindow {
  complex center{};
  double half_width = 1.0;
  double half_height = 1.0;
  int px_width = 2;
  int px_height = 2;

  complex pixel_point(int col, int row) const;
  void validate() const;
};

enum class Pixel : std::uint8_t { Outside = 0, Inside = 1 };

struct RasterImage {
  RasterWindow window;
  std::vector<Pixel> pixels;  // row-major

  Pixel at(int col, int row) const {
    return pixels[static_cast<std::size_t>(row) * static_cast<std::size_t>(window.px_width) +
                  static_cast<std::size_t>(col)];
  }
  std::size_t inside_count() const;
};

/// Marks each pixel Inside iff |f| (or Re f) there strictly exceeds its
/// value at `reference` (defaults to the window center). Rows are
/// evaluated in parallel.
RasterImage rasterize_level_region(const ComplexFunction& f, const RasterWindow& window,
                                   SampleMode mode, std::optional<complex> reference = {});
RasterImage rasterize_level_region(const PowerSeries& f, const RasterWindow& window,
                                   SampleMode mode, std::optional<complex> reference = {});

/// Single-threaded reference for rasterize_level_region().
RasterImage rasterize_level_region_serial(const ComplexFunction& f, const RasterWindow& window,
                                          SampleMode mode, std::optional<complex> reference = {});

/// Plain PGM ("P2"), Inside = 0, Outside = 255, one image row per line.
std::string write_pgm(const RasterImage& img);

/// SVG 1.1 with the raster as run-length rectangles, one line per boundary
/// ray and an arc marking each ascent sector.
std::string overlay_svg(const ConeDecomposition& decomp, const RasterImage& img, int ray_length_px);

}  // namespace modcone
