#include "modcone/descent.hpp"

#include <cmath>
#include <numbers>

namespace modcone {

const char* to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged: return "Converged";
    case SolverStatus::MaxItersExceeded: return "MaxItersExceeded";
    case SolverStatus::NonDecreasingStep: return "NonDecreasingStep";
  }
  return "MaxItersExceeded";
}

DescentDirection descent_direction(const PowerSeries& p, complex z, const NonvanishingPolicy& tol) {
  const PowerSeries local = recenter(p, z);
  const int k = first_nonvanishing_order(local, tol);
  const complex pivot = std::conj(local.coeff(0)) * derivative_at_center(local, k);
  const double alpha = std::arg(pivot);
  return {wrap_angle((std::numbers::pi - alpha) / k), k};
}

SolverResult descend(const PowerSeries& p, complex start, const SolverOptions& opts) {
  if (!p.is_exact()) throw Error(ErrorCode::UnsupportedRecenter, "descent needs an exact polynomial");
  if (!(opts.step_shrink > 0.0 && opts.step_shrink < 1.0) || !(opts.initial_step > 0.0) ||
      opts.max_iters < 0 || opts.max_shrinks_per_iter < 0) {
    throw Error(ErrorCode::InvalidInput, "invalid solver options");
  }
  first_nonvanishing_order(p, opts.tol);  // rejects constants up front

  SolverResult result;
  complex z = start;
  double modulus = std::abs(evaluate(p, z));
  result.trace.push_back({z, modulus, 0, 0.0, 0.0});
  result.status = SolverStatus::MaxItersExceeded;

  while (true) {
    if (modulus <= opts.tol_residual) {
      result.status = SolverStatus::Converged;
      break;
    }
    if (result.iterations >= opts.max_iters) break;

    const DescentDirection dir = descent_direction(p, z, opts.tol);
    const complex unit = std::polar(1.0, dir.theta);
    double t = opts.initial_step;
    bool accepted = false;
    for (int shrink = 0; shrink <= opts.max_shrinks_per_iter; ++shrink, t *= opts.step_shrink) {
      const complex candidate = z + t * unit;
      const double m = std::abs(evaluate(p, candidate));
      if (m < modulus) {
        z = candidate;
        modulus = m;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      result.status = SolverStatus::NonDecreasingStep;
      break;
    }
    ++result.iterations;
    result.trace.push_back({z, modulus, dir.k, dir.theta, t});
  }

  result.root = z;
  result.residual = modulus;
  result.converged = result.status == SolverStatus::Converged;
  return result;
}

}  // namespace modcone
