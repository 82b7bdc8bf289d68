#include "modcone/cone.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

namespace modcone {

const char* to_string(ConeKind kind) {
  return kind == ConeKind::HolomorphicModulus ? "holomorphic_modulus" : "harmonic_real_part";
}

const char* to_string(ArcLabel label) { return label == ArcLabel::Ascent ? "ascent" : "descent"; }

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Ascent: return "Ascent";
    case Verdict::Descent: return "Descent";
    case Verdict::AllAscent: return "AllAscent";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

double wrap_angle(double theta) {
  double w = std::fmod(theta, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double angular_distance(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

bool Arc::contains(double theta) const {
  const double t = wrap_angle(theta);
  return (start < t && t < end) || (start < t + kTwoPi && t + kTwoPi < end);
}

std::optional<ArcLabel> ConeDecomposition::label_at(double theta) const {
  for (const Arc& arc : arcs) {
    if (arc.contains(theta)) return arc.label;
  }
  if (all_ascent) return ArcLabel::Ascent;
  return std::nullopt;
}

double ConeDecomposition::distance_to_boundary(double theta) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& ray : boundary_rays) best = std::min(best, angular_distance(theta, ray.angle));
  return best;
}

namespace {

double max_abs(std::span<const complex> a) {
  double m = 0.0;
  for (complex c : a) m = std::max(m, std::abs(c));
  return m;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// 2k sectors of width pi/k; the ascent sectors are centred on -phase/k + 2*pi*j/k.
void fill_sectors(ConeDecomposition& d) {
  const int k = d.k;
  const double width = std::numbers::pi / k;
  const double first = (-2.0 * d.pivot_phase - std::numbers::pi) / (2.0 * k);
  d.arcs.clear();
  for (int i = 0; i < 2 * k; ++i) {
    const double start = wrap_angle(first + i * width);
    d.arcs.push_back({start, start + width, i % 2 == 0 ? ArcLabel::Ascent : ArcLabel::Descent});
  }
  std::sort(d.arcs.begin(), d.arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });
}

// Scan coefficients c_1..c_limit for the first significant one.
RayClassification scan(double theta, const std::vector<double>& c, int limit, double threshold) {
  RayClassification out;
  out.angle = wrap_angle(theta);
  for (int m = 1; m <= limit && m < static_cast<int>(c.size()); ++m) {
    const double v = c[static_cast<std::size_t>(m)];
    if (std::abs(v) > threshold) {
      out.verdict = v > 0.0 ? Verdict::Ascent : Verdict::Descent;
      out.witness_order = m;
      out.witness_value = v;
      return out;
    }
  }
  out.verdict = Verdict::Inconclusive;
  return out;
}

}  // namespace

int first_nonvanishing_order(const PowerSeries& s, const NonvanishingPolicy& tol) {
  const auto a = s.coeffs();
  const double threshold = tol.abs_floor + tol.rel_factor * max_abs(a);
  for (std::size_t l = 1; l < a.size(); ++l) {
    if (std::abs(a[l]) > threshold) return static_cast<int>(l);
  }
  throw Error(ErrorCode::LocallyConstant,
              "no nonvanishing derivative up to order " + std::to_string(s.truncation_order()));
}

ConeDecomposition holomorphic_cone(const PowerSeries& s, const NonvanishingPolicy& tol) {
  ConeDecomposition d;
  d.kind = ConeKind::HolomorphicModulus;
  d.center = s.center();
  d.k = first_nonvanishing_order(s, tol);
  const complex a0 = s.coeff(0);
  if (std::abs(a0) <= tol.abs_floor) {
    d.all_ascent = true;
    d.arcs.push_back({0.0, kTwoPi, ArcLabel::Ascent});
    return d;
  }
  const complex pivot = std::conj(a0) * factorial(d.k) * s.coeff(static_cast<std::size_t>(d.k));
  d.pivot_magnitude = std::abs(pivot);
  d.pivot_phase = wrap_angle(std::arg(pivot));
  fill_sectors(d);
  for (const Arc& arc : d.arcs) d.boundary_rays.push_back(classify_ray(s, arc.start, tol));
  return d;
}

ConeDecomposition harmonic_cone(const PowerSeries& f, const NonvanishingPolicy& tol) {
  ConeDecomposition d;
  d.kind = ConeKind::HarmonicRealPart;
  d.center = f.center();
  d.k = first_nonvanishing_order(f, tol);
  const complex pivot = factorial(d.k) * f.coeff(static_cast<std::size_t>(d.k));
  d.pivot_magnitude = std::abs(pivot);
  d.pivot_phase = wrap_angle(std::arg(pivot));
  fill_sectors(d);
  for (const Arc& arc : d.arcs) d.boundary_rays.push_back(classify_harmonic_ray(f, arc.start, tol));
  return d;
}

std::vector<double> modulus_square_coefficients(const PowerSeries& s, double theta, int order) {
  const int n = s.truncation_order();
  if (order > 2 * n) {
    throw Error(ErrorCode::OrderTooLarge, "F-series order exceeds twice the truncation order");
  }
  if (order < 0) throw Error(ErrorCode::InvalidInput, "negative order");
  // b_i = a_i e^{i i theta}; then c_m = sum_{i+j=m} b_i conj(b_j).
  std::vector<complex> b(static_cast<std::size_t>(n) + 1);
  double l1 = 0.0;
  for (int i = 0; i <= n; ++i) {
    const complex a = s.coeff(static_cast<std::size_t>(i));
    b[static_cast<std::size_t>(i)] = a * std::polar(1.0, i * theta);
    l1 += std::abs(a);
  }
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    complex sum{};
    for (int i = std::max(0, m - n); i <= std::min(m, n); ++i) {
      sum += b[static_cast<std::size_t>(i)] * std::conj(b[static_cast<std::size_t>(m - i)]);
    }
    assert(std::abs(sum.imag()) <= 1e-12 * l1 * l1 + 1e-300);
    c[static_cast<std::size_t>(m)] = sum.real();
  }
  return c;
}

std::vector<double> real_part_coefficients(const PowerSeries& s, double theta) {
  std::vector<double> d(static_cast<std::size_t>(s.truncation_order()) + 1);
  for (std::size_t m = 0; m < d.size(); ++m) {
    d[m] = (s.coeff(m) * std::polar(1.0, static_cast<double>(m) * theta)).real();
  }
  return d;
}

RayClassification classify_ray(const PowerSeries& s, double theta, const NonvanishingPolicy& tol) {
  if (std::abs(s.coeff(0)) <= tol.abs_floor) {
    RayClassification out;
    out.angle = wrap_angle(theta);
    out.verdict = Verdict::AllAscent;
    return out;
  }
  const int n = s.truncation_order();
  // Past order N a truncated series no longer determines the F coefficients.
  const int limit = s.is_exact() ? 2 * n : n;
  const auto c = modulus_square_coefficients(s, theta, 2 * n);
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  auto out = scan(theta, c, limit, tol.abs_floor + tol.rel_factor * scale);
  if (out.verdict == Verdict::Inconclusive) {
    out.diagnostic = s.is_exact()
                         ? "squared modulus constant along ray; input is numerically constant"
                         : "no significant coefficient up to order " + std::to_string(limit);
  }
  return out;
}

RayClassification classify_harmonic_ray(const PowerSeries& f, double theta,
                                        const NonvanishingPolicy& tol) {
  const auto d = real_part_coefficients(f, theta);
  const double threshold = tol.abs_floor + tol.rel_factor * max_abs(f.coeffs());
  auto out = scan(theta, d, f.truncation_order(), threshold);
  if (out.verdict == Verdict::Inconclusive) {
    out.diagnostic = f.is_exact()
                         ? "real part constant along ray"
                         : "no significant coefficient up to order " +
                               std::to_string(f.truncation_order());
  }
  return out;
}

}  // namespace modcone
