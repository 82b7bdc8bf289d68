#pragma once

#include <complex>
#include <span>
#include <vector>

#include "modcone/error.hpp"

namespace modcone {

using complex = std::complex<double>;

enum class Exactness { ExactPolynomial, Truncated };

/// Local expansion sum_j a_j (z - z0)^j, truncated at order N = coeffs.size() - 1.
///
/// An ExactPolynomial series equals its function everywhere. A Truncated
/// series is only a Maclaurin-type expansion valid near its center; its
/// radius of validity is not tracked.
class PowerSeries {
 public:
  PowerSeries(std::vector<complex> coeffs, complex center, Exactness exactness);

  complex center() const noexcept { return center_; }
  std::span<const complex> coeffs() const noexcept { return coeffs_; }
  complex coeff(std::size_t j) const noexcept { return j < coeffs_.size() ? coeffs_[j] : complex{}; }
  int truncation_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Exactness exactness() const noexcept { return exactness_; }
  bool is_exact() const noexcept { return exactness_ == Exactness::ExactPolynomial; }

 private:
  std::vector<complex> coeffs_;
  complex center_;
  Exactness exactness_;
};

PowerSeries make_polynomial(std::vector<complex> coeffs, complex center = {});
PowerSeries make_truncated(std::vector<complex> coeffs, complex center = {});

/// Horner evaluation of sum_{j<=N} a_j (z - z0)^j.
complex evaluate(const PowerSeries& s, complex z);

/// s(z) - a_0, evaluated without forming a_0 + h so that tiny increments survive.
complex increment(const PowerSeries& s, complex z);

/// l! * a_l, or exactly 0 past the truncation order.
complex derivative_at_center(const PowerSeries& s, int order);

/// Taylor shift of an exact polynomial to a new expansion point.
PowerSeries recenter(const PowerSeries& s, complex new_center);

/// Cauchy product truncated at `order`.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, int order);

PowerSeries reciprocal(const PowerSeries& s, int order);

/// exp(s) through the recurrence m g_m = sum_{j=1}^m j a_j g_{m-j}.
PowerSeries exp_series(const PowerSeries& s, int order);

/// Expansion of numer/denom about `center` to `order`; both inputs exact.
PowerSeries rational_expansion(const PowerSeries& numer, const PowerSeries& denom, complex center,
                               int order);

}  // namespace modcone
