#include "modcone/ray_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace modcone {

const char* to_string(EmpiricalVerdict v) {
  switch (v) {
    case EmpiricalVerdict::Ascent: return "Ascent";
    case EmpiricalVerdict::Descent: return "Descent";
    case EmpiricalVerdict::Mixed: return "Mixed";
  }
  return "Mixed";
}

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

EmpiricalVerdict verdict_of_sign(int sign) {
  if (sign > 0) return EmpiricalVerdict::Ascent;
  if (sign < 0) return EmpiricalVerdict::Descent;
  return EmpiricalVerdict::Mixed;
}

// Minimum number of trailing radii that must agree for an eventual verdict.
std::size_t min_tail_for(int samples) { return std::max<std::size_t>(4, static_cast<std::size_t>(samples) / 4); }

bool sample_matches(const RaySample& sample, ArcLabel predicted, std::size_t min_tail) {
  const EmpiricalVerdict v = sample.eventual_verdict(min_tail);
  return (predicted == ArcLabel::Ascent && v == EmpiricalVerdict::Ascent) ||
         (predicted == ArcLabel::Descent && v == EmpiricalVerdict::Descent);
}

enum class Outcome { Match, Mismatch, Skipped };

struct AngleResult {
  Outcome outcome = Outcome::Skipped;
  Mismatch mismatch;
};

AngleResult check_angle(const ConeDecomposition& decomp, const PowerSeries& s,
                        const CompareOptions& opts, int i) {
  AngleResult r;
  const double theta = kTwoPi * i / opts.angle_count;
  if (decomp.distance_to_boundary(theta) < opts.boundary_margin) return r;
  const auto predicted = decomp.label_at(theta);
  if (!predicted) return r;
  const SampleMode mode =
      decomp.kind == ConeKind::HolomorphicModulus ? SampleMode::Modulus : SampleMode::RealPart;
  const RaySample sample = sample_ray(s, theta, opts.t_max, opts.samples, mode);
  if (sample_matches(sample, *predicted, min_tail_for(opts.samples))) {
    r.outcome = Outcome::Match;
  } else {
    r.outcome = Outcome::Mismatch;
    r.mismatch = {theta, *predicted, sample.eventual_verdict(min_tail_for(opts.samples))};
  }
  return r;
}

AgreementReport aggregate(const std::vector<AngleResult>& results) {
  AgreementReport report;
  report.angles_tested = static_cast<int>(results.size());
  for (const auto& r : results) {
    switch (r.outcome) {
      case Outcome::Match: ++report.matches; break;
      case Outcome::Mismatch: report.mismatches.push_back(r.mismatch); break;
      case Outcome::Skipped: ++report.skipped_near_boundary; break;
    }
  }
  return report;
}

void validate(const CompareOptions& opts) {
  if (opts.angle_count < 1) throw Error(ErrorCode::InvalidInput, "angle_count must be positive");
  if (!(opts.t_max > 0.0)) throw Error(ErrorCode::InvalidInput, "t_max must be positive");
  if (opts.boundary_margin < 0.0) throw Error(ErrorCode::InvalidInput, "negative boundary margin");
}

}  // namespace

EmpiricalVerdict RaySample::eventual_verdict(std::size_t min_tail) const {
  if (deltas.empty()) return EmpiricalVerdict::Mixed;
  const int tail_sign = sign_of(deltas.back());
  if (tail_sign == 0) return EmpiricalVerdict::Mixed;
  std::size_t run = 0;
  for (auto it = deltas.rbegin(); it != deltas.rend() && sign_of(*it) == tail_sign; ++it) ++run;
  return run >= std::min(min_tail, deltas.size()) ? verdict_of_sign(tail_sign)
                                                  : EmpiricalVerdict::Mixed;
}

RaySample sample_ray(const PowerSeries& s, double theta, double t_max, int samples,
                     SampleMode mode) {
  if (samples < 8) throw Error(ErrorCode::InvalidInput, "sample_ray needs at least 8 radii");
  if (!(t_max > 0.0)) throw Error(ErrorCode::InvalidInput, "t_max must be positive");
  RaySample out;
  out.angle = wrap_angle(theta);
  const complex dir = std::polar(1.0, theta);
  const complex a0 = s.coeff(0);
  out.radii.reserve(static_cast<std::size_t>(samples));
  out.deltas.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = std::ldexp(t_max, -i);
    // h = f(z) - f(z0); |a0 + h|^2 - |a0|^2 = 2 Re(conj(a0) h) + |h|^2 without cancellation.
    const complex h = increment(s, s.center() + t * dir);
    const double delta =
        mode == SampleMode::Modulus ? 2.0 * (std::conj(a0) * h).real() + std::norm(h) : h.real();
    out.radii.push_back(t);
    out.deltas.push_back(delta);
  }
  const bool all_pos = std::all_of(out.deltas.begin(), out.deltas.end(), [](double d) { return d > 0.0; });
  const bool all_neg = std::all_of(out.deltas.begin(), out.deltas.end(), [](double d) { return d < 0.0; });
  out.empirical_verdict =
      all_pos ? EmpiricalVerdict::Ascent : (all_neg ? EmpiricalVerdict::Descent : EmpiricalVerdict::Mixed);
  return out;
}

AgreementReport compare(const ConeDecomposition& decomp, const PowerSeries& s,
                        const CompareOptions& opts) {
  validate(opts);
  std::vector<AngleResult> results(static_cast<std::size_t>(opts.angle_count));
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < opts.angle_count; ++i) {
    results[static_cast<std::size_t>(i)] = check_angle(decomp, s, opts, i);
  }
  return aggregate(results);
}

AgreementReport compare_serial(const ConeDecomposition& decomp, const PowerSeries& s,
                               const CompareOptions& opts) {
  validate(opts);
  std::vector<AngleResult> results;
  results.reserve(static_cast<std::size_t>(opts.angle_count));
  for (int i = 0; i < opts.angle_count; ++i) results.push_back(check_angle(decomp, s, opts, i));
  return aggregate(results);
}

double default_t_max(const PowerSeries& s) {
  double scale = 1.0;
  const auto a = s.coeffs();
  const int n = s.truncation_order();
  // Fujiwara-style root-size estimate; a truncated series keeps scale 1.
  if (s.is_exact() && n >= 1 && a.back() != complex{}) {
    const double lead = std::abs(a.back());
    for (int j = 0; j < n; ++j) {
      double ratio = std::abs(a[static_cast<std::size_t>(j)]) / lead;
      if (j == 0) ratio *= 0.5;
      scale = std::max(scale, 2.0 * std::pow(ratio, 1.0 / (n - j)));
    }
  }
  return 1e-2 * scale;
}

complex find_nearby_zero(const PowerSeries& f, double radius, int probes) {
  if (std::abs(f.coeff(0).real()) > 1e-12) {
    throw Error(ErrorCode::InvalidInput, "Re f does not vanish at the center");
  }
  if (!(radius > 0.0) || probes < 2) throw Error(ErrorCode::InvalidInput, "bad probe circle");
  const complex z0 = f.center();
  auto u = [&](double phi) { return evaluate(f, z0 + std::polar(radius, phi)).real(); };

  std::vector<double> values(static_cast<std::size_t>(probes));
  double scale = 0.0;
  for (int i = 0; i < probes; ++i) {
    values[static_cast<std::size_t>(i)] = u(kTwoPi * i / probes);
    scale = std::max(scale, std::abs(values[static_cast<std::size_t>(i)]));
  }
  const double target = 1e-12 * scale;
  for (int i = 0; i < probes; ++i) {
    double lo = kTwoPi * i / probes;
    double hi = kTwoPi * (i + 1) / probes;
    double ulo = values[static_cast<std::size_t>(i)];
    const double uhi = values[static_cast<std::size_t>((i + 1) % probes)];
    if (std::abs(ulo) <= target) return z0 + std::polar(radius, lo);
    if (sign_of(ulo) == sign_of(uhi)) continue;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double umid = u(mid);
      if (std::abs(umid) <= target || mid == lo || mid == hi) return z0 + std::polar(radius, mid);
      if (sign_of(umid) == sign_of(ulo)) {
        lo = mid;
        ulo = umid;
      } else {
        hi = mid;
      }
    }
    return z0 + std::polar(radius, 0.5 * (lo + hi));
  }
  throw Error(ErrorCode::ZeroNotBracketed, "Re f keeps one sign on the probe circle");
}

}  // namespace modcone
