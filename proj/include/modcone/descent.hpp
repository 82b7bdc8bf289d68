#pragma once

#include <vector>

#include "modcone/cone.hpp"
#include "modcone/series.hpp"

namespace modcone {

struct SolverOptions {
  double tol_residual = 1e-10;
  int max_iters = 500;
  double initial_step = 0.5;
  double step_shrink = 0.5;
  int max_shrinks_per_iter = 60;
  NonvanishingPolicy tol{};
};

enum class SolverStatus { Converged, MaxItersExceeded, NonDecreasingStep };

const char* to_string(SolverStatus status);

struct TraceEntry {
  complex z{};
  double modulus = 0.0;
  int k = 0;          // order used for the step that produced z (0 for the start)
  double theta = 0.0;
  double step = 0.0;
};

struct SolverResult {
  complex root{};
  double residual = 0.0;
  int iterations = 0;
  std::vector<TraceEntry> trace;  // starting point first; moduli strictly decreasing
  bool converged = false;
  SolverStatus status = SolverStatus::MaxItersExceeded;
};

struct DescentDirection {
  double theta = 0.0;
  int k = 1;
};

/// Midpoint of a descent sector of |p| at z, where cos(alpha + k theta) = -1.
DescentDirection descent_direction(const PowerSeries& p, complex z, const NonvanishingPolicy& tol = {});

/// Modulus descent with backtracking: step along descent_direction, shrinking
/// the step until |p| strictly decreases. Always returns the best iterate;
/// `status` tells why the iteration stopped.
SolverResult descend(const PowerSeries& p, complex start, const SolverOptions& opts = {});

}  // namespace modcone
