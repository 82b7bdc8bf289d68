#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcone/series.hpp"

namespace modcone {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Decides when a coefficient counts as nonzero: |a| > abs_floor + rel_factor * scale.
struct NonvanishingPolicy {
  double abs_floor = 1e-12;
  double rel_factor = 1e-10;
};

enum class ConeKind { HolomorphicModulus, HarmonicRealPart };
enum class ArcLabel { Ascent, Descent };
enum class Verdict { Ascent, Descent, AllAscent, Inconclusive };

const char* to_string(ConeKind kind);
const char* to_string(ArcLabel label);
const char* to_string(Verdict verdict);

/// Maps an angle into [0, 2*pi).
double wrap_angle(double theta);
/// Distance on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Open arc (start, end). start is in [0, 2*pi); end may exceed 2*pi when the
/// arc wraps through angle 0, so every logical sector is one stored arc.
struct Arc {
  double start = 0.0;
  double end = 0.0;
  ArcLabel label = ArcLabel::Ascent;

  bool contains(double theta) const;
  double width() const { return end - start; }
  double midpoint() const { return wrap_angle(0.5 * (start + end)); }
};

struct RayClassification {
  double angle = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> witness_order;     // first m >= 1 with a significant coefficient
  std::optional<double> witness_value;  // that coefficient
  std::string diagnostic;
};

struct ConeDecomposition {
  ConeKind kind = ConeKind::HolomorphicModulus;
  complex center{};
  int k = 1;
  double pivot_phase = 0.0;      // alpha (modulus) or beta (real part), in [0, 2*pi)
  double pivot_magnitude = 0.0;  // r or s
  std::vector<Arc> arcs;         // sorted by start
  std::vector<RayClassification> boundary_rays;  // sorted by angle
  bool all_ascent = false;

  /// Label of the arc containing theta; nullopt exactly on a boundary ray.
  std::optional<ArcLabel> label_at(double theta) const;
  /// Angular distance to the nearest boundary ray (+inf when there are none).
  double distance_to_boundary(double theta) const;
};

/// Smallest l >= 1 with |a_l| > abs_floor + rel_factor * max_j |a_j|.
/// Throws LocallyConstant if there is none up to the truncation order.
int first_nonvanishing_order(const PowerSeries& s, const NonvanishingPolicy& tol = {});

/// Cones of ascent/descent of |f| at the series center.
ConeDecomposition holomorphic_cone(const PowerSeries& s, const NonvanishingPolicy& tol = {});

/// Cones of ascent/descent of u = Re f at the series center.
ConeDecomposition harmonic_cone(const PowerSeries& f, const NonvanishingPolicy& tol = {});

/// Maclaurin coefficients c_0..c_order of F(t) = |s(z0 + t e^{i theta})|^2.
std::vector<double> modulus_square_coefficients(const PowerSeries& s, double theta, int order);

/// Maclaurin coefficients of u(z0 + t e^{i theta}) = Re s(z0 + t e^{i theta}).
std::vector<double> real_part_coefficients(const PowerSeries& s, double theta);

/// Verdict for |f| along one ray, decided by the first significant c_m.
RayClassification classify_ray(const PowerSeries& s, double theta, const NonvanishingPolicy& tol = {});

/// Verdict for Re f along one ray.
RayClassification classify_harmonic_ray(const PowerSeries& f, double theta,
                                        const NonvanishingPolicy& tol = {});

}  // namespace modcone
