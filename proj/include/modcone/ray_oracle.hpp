#pragma once

#include <vector>

#include "modcone/cone.hpp"
#include "modcone/series.hpp"

namespace modcone {

enum class SampleMode { Modulus, RealPart };
enum class EmpiricalVerdict { Ascent, Descent, Mixed };

const char* to_string(EmpiricalVerdict v);

struct RaySample {
  double angle = 0.0;
  std::vector<double> radii;   // strictly decreasing
  std::vector<double> deltas;  // F(t_i) - F(0) or u(t_i) - u(0)
  EmpiricalVerdict empirical_verdict = EmpiricalVerdict::Mixed;

  /// Sign of the longest constant-sign suffix of deltas, if that suffix
  /// covers at least `min_tail` of the smallest radii.
  EmpiricalVerdict eventual_verdict(std::size_t min_tail) const;
};

struct Mismatch {
  double angle = 0.0;
  ArcLabel predicted = ArcLabel::Ascent;
  EmpiricalVerdict empirical = EmpiricalVerdict::Mixed;
};

struct AgreementReport {
  int angles_tested = 0;
  int matches = 0;
  std::vector<Mismatch> mismatches;
  int skipped_near_boundary = 0;
};

struct CompareOptions {
  int angle_count = 360;
  double t_max = 1e-2;
  double boundary_margin = 0.02;
  int samples = 16;
};

/// Samples along z0 + t e^{i theta} on t_i = t_max * 2^{-i}, i = 0..samples-1.
RaySample sample_ray(const PowerSeries& s, double theta, double t_max, int samples, SampleMode mode);

/// Checks a predicted decomposition against ray sampling at evenly spaced
/// angles. A sample matches when its deltas settle, for all small enough
/// radii on the grid, to the predicted sign. Angles are swept in parallel.
AgreementReport compare(const ConeDecomposition& decomp, const PowerSeries& s,
                        const CompareOptions& opts = {});

/// Single-threaded reference for compare().
AgreementReport compare_serial(const ConeDecomposition& decomp, const PowerSeries& s,
                               const CompareOptions& opts = {});

/// Default sampling radius for a series: 1e-2 times a scale radius.
double default_t_max(const PowerSeries& s);

/// A point w with 0 < |w - z0| <= radius where Re f(w) vanishes, found by
/// scanning `probes` angles on the circle for a sign change of Re f and
/// bisecting. Requires |Re f(z0)| <= 1e-12.
complex find_nearby_zero(const PowerSeries& f, double radius, int probes);

}  // namespace modcone
