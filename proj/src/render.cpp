#include "modcone/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace modcone {

complex RasterWindow::pixel_point(int col, int row) const {
  const double dx = 2.0 * half_width / (px_width - 1);
  const double dy = 2.0 * half_height / (px_height - 1);
  return {center.real() - half_width + col * dx, center.imag() + half_height - row * dy};
}

void RasterWindow::validate() const {
  if (px_width < 2 || px_height < 2) throw Error(ErrorCode::InvalidInput, "raster needs at least 2x2 pixels");
  if (!(half_width > 0.0) || !(half_height > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "window half extents must be positive");
  }
}

std::size_t RasterImage::inside_count() const {
  return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), Pixel::Inside));
}

namespace {

template <typename Fn>
double level_value(const Fn& f, complex z, SampleMode mode) {
  const complex v = f(z);
  if (std::isinf(v.real()) || std::isinf(v.imag())) return std::numeric_limits<double>::infinity();
  return mode == SampleMode::Modulus ? std::abs(v) : v.real();
}

template <typename Fn>
void fill_row(const Fn& f, const RasterWindow& w, SampleMode mode, double threshold, int row,
              std::vector<Pixel>& pixels) {
  const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(w.px_width);
  for (int col = 0; col < w.px_width; ++col) {
    const double v = level_value(f, w.pixel_point(col, row), mode);
    pixels[base + static_cast<std::size_t>(col)] = v > threshold ? Pixel::Inside : Pixel::Outside;
  }
}

template <typename Fn>
RasterImage rasterize(const Fn& f, const RasterWindow& window, SampleMode mode,
                      std::optional<complex> reference, bool parallel) {
  window.validate();
  RasterImage img{window, std::vector<Pixel>(static_cast<std::size_t>(window.px_width) *
                                             static_cast<std::size_t>(window.px_height))};
  const double threshold = level_value(f, reference.value_or(window.center), mode);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int row = 0; row < window.px_height; ++row) fill_row(f, window, mode, threshold, row, img.pixels);
  } else {
    for (int row = 0; row < window.px_height; ++row) fill_row(f, window, mode, threshold, row, img.pixels);
  }
  return img;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

RasterImage rasterize_level_region(const ComplexFunction& f, const RasterWindow& window,
                                   SampleMode mode, std::optional<complex> reference) {
  return rasterize(f, window, mode, reference, true);
}

RasterImage rasterize_level_region(const PowerSeries& f, const RasterWindow& window,
                                   SampleMode mode, std::optional<complex> reference) {
  auto eval = [&f](complex z) { return evaluate(f, z); };
  return rasterize(eval, window, mode, reference, true);
}

RasterImage rasterize_level_region_serial(const ComplexFunction& f, const RasterWindow& window,
                                          SampleMode mode, std::optional<complex> reference) {
  return rasterize(f, window, mode, reference, false);
}

std::string write_pgm(const RasterImage& img) {
  const auto& w = img.window;
  std::string out = "P2\n" + std::to_string(w.px_width) + " " + std::to_string(w.px_height) + "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 4);
  for (int row = 0; row < w.px_height; ++row) {
    for (int col = 0; col < w.px_width; ++col) {
      if (col > 0) out += ' ';
      out += img.at(col, row) == Pixel::Inside ? "0" : "255";
    }
    out += '\n';
  }
  return out;
}

std::string overlay_svg(const ConeDecomposition& decomp, const RasterImage& img, int ray_length_px) {
  const RasterWindow& w = img.window;
  const double tol = 1e-9 * std::max({1.0, w.half_width, w.half_height});
  if (std::abs(decomp.center - w.center) > tol) {
    throw Error(ErrorCode::InvalidInput, "decomposition center differs from window center");
  }
  const double px_per_re = (w.px_width - 1) / (2.0 * w.half_width);
  const double px_per_im = (w.px_height - 1) / (2.0 * w.half_height);
  // Pixel (col,row) covers [col, col+1] x [row, row+1]; the window center
  // lands at the middle of the canvas.
  const double cx = 0.5 * w.px_width;
  const double cy = 0.5 * w.px_height;
  auto screen = [&](double theta, double length) {
    const double dx = std::cos(theta) * px_per_re;
    const double dy = -std::sin(theta) * px_per_im;
    const double n = std::hypot(dx, dy);
    return std::pair{cx + length * dx / n, cy + length * dy / n};
  };

  const std::string W = std::to_string(w.px_width);
  const std::string H = std::to_string(w.px_height);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + W + "\" height=\"" + H +
         "\" viewBox=\"0 0 " + W + " " + H + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + W + "\" height=\"" + H + "\" fill=\"white\"/>\n";
  out += "<g id=\"raster\" fill=\"black\" shape-rendering=\"crispEdges\">\n";
  for (int row = 0; row < w.px_height; ++row) {
    int col = 0;
    while (col < w.px_width) {
      if (img.at(col, row) != Pixel::Inside) {
        ++col;
        continue;
      }
      const int begin = col;
      while (col < w.px_width && img.at(col, row) == Pixel::Inside) ++col;
      out += "<rect x=\"" + std::to_string(begin) + "\" y=\"" + std::to_string(row) + "\" width=\"" +
             std::to_string(col - begin) + "\" height=\"1\"/>\n";
    }
  }
  out += "</g>\n";

  const double L = ray_length_px;
  out += "<g id=\"rays\" stroke=\"red\" stroke-width=\"1\">\n";
  for (const auto& ray : decomp.boundary_rays) {
    const auto [x, y] = screen(ray.angle, L);
    out += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(cy) + "\" x2=\"" + fmt(x) + "\" y2=\"" + fmt(y) +
           "\"><title>boundary " + fmt(ray.angle) + " " + to_string(ray.verdict) + "</title></line>\n";
  }
  out += "</g>\n";

  const double R = 0.6 * L;
  out += "<g id=\"ascent\" fill=\"none\" stroke=\"blue\" stroke-width=\"1\">\n";
  if (decomp.all_ascent) {
    out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(R) +
           "\"><title>ascent: full circle</title></circle>\n";
    out += "<text x=\"" + fmt(cx + R) + "\" y=\"" + fmt(cy) + "\" fill=\"blue\" stroke=\"none\" font-size=\"10\">all ascent</text>\n";
  } else {
    for (const Arc& arc : decomp.arcs) {
      if (arc.label != ArcLabel::Ascent) continue;
      const auto [x0, y0] = screen(arc.start, R);
      const auto [x1, y1] = screen(arc.end, R);
      out += "<path d=\"M " + fmt(x0) + " " + fmt(y0) + " A " + fmt(R) + " " + fmt(R) + " 0 0 0 " +
             fmt(x1) + " " + fmt(y1) + "\"><title>ascent (" + fmt(arc.start) + ", " + fmt(arc.end) +
             ")</title></path>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace modcone
