#include "modcone/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace modcone {

namespace {

void check_order(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidInput, "negative truncation order");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<complex> coeffs, complex center, Exactness exactness)
    : coeffs_(std::move(coeffs)), center_(center), exactness_(exactness) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidInput, "empty coefficient list");
}

PowerSeries make_polynomial(std::vector<complex> coeffs, complex center) {
  return PowerSeries(std::move(coeffs), center, Exactness::ExactPolynomial);
}

PowerSeries make_truncated(std::vector<complex> coeffs, complex center) {
  return PowerSeries(std::move(coeffs), center, Exactness::Truncated);
}

complex evaluate(const PowerSeries& s, complex z) {
  const auto a = s.coeffs();
  const complex x = z - s.center();
  complex acc = a.back();
  for (std::size_t j = a.size() - 1; j-- > 0;) acc = acc * x + a[j];
  return acc;
}

complex increment(const PowerSeries& s, complex z) {
  const auto a = s.coeffs();
  if (a.size() == 1) return {};
  const complex x = z - s.center();
  complex acc = a.back();
  for (std::size_t j = a.size() - 1; j-- > 1;) acc = acc * x + a[j];
  return acc * x;
}

complex derivative_at_center(const PowerSeries& s, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidInput, "negative derivative order");
  if (order > s.truncation_order()) return {};
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  if (!std::isfinite(fact)) {
    throw Error(ErrorCode::OrderTooLarge, std::to_string(order) + "! overflows double");
  }
  return fact * s.coeff(static_cast<std::size_t>(order));
}

PowerSeries recenter(const PowerSeries& s, complex new_center) {
  if (!s.is_exact()) {
    throw Error(ErrorCode::UnsupportedRecenter, "only exact polynomials can be re-expanded");
  }
  std::vector<complex> a(s.coeffs().begin(), s.coeffs().end());
  const complex d = new_center - s.center();
  const int n = static_cast<int>(a.size()) - 1;
  // Repeated synthetic division by (x - d).
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += d * a[static_cast<std::size_t>(j) + 1];
  }
  return make_polynomial(std::move(a), new_center);
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, int order) {
  check_order(order);
  if (a.center() != b.center()) {
    throw Error(ErrorCode::CenterMismatch, "Cauchy product of series with different centers");
  }
  const int na = a.truncation_order();
  const int nb = b.truncation_order();
  std::vector<complex> c(static_cast<std::size_t>(order) + 1);
  auto term = [&](int i, int m) {
    return a.coeff(static_cast<std::size_t>(i)) * b.coeff(static_cast<std::size_t>(m - i));
  };
  for (int m = 0; m <= std::min(order, na + nb); ++m) {
    // Mirrored pairs make the sum invariant under swapping a and b.
    complex sum{};
    for (int i = 0; 2 * i < m; ++i) sum += term(i, m) + term(m - i, m);
    if (m % 2 == 0) sum += term(m / 2, m);
    c[static_cast<std::size_t>(m)] = sum;
  }
  const bool exact = a.is_exact() && b.is_exact() && order >= na + nb;
  return PowerSeries(std::move(c), a.center(),
                     exact ? Exactness::ExactPolynomial : Exactness::Truncated);
}

PowerSeries reciprocal(const PowerSeries& s, int order) {
  check_order(order);
  const complex a0 = s.coeff(0);
  if (a0 == complex{}) {
    throw Error(ErrorCode::DivisionBySingularSeries, "reciprocal of a series with a_0 = 0");
  }
  const complex inv = 1.0 / a0;
  const int n = s.truncation_order();
  std::vector<complex> b(static_cast<std::size_t>(order) + 1);
  b[0] = inv;
  for (int m = 1; m <= order; ++m) {
    complex sum{};
    for (int j = 1; j <= std::min(m, n); ++j) {
      sum += s.coeff(static_cast<std::size_t>(j)) * b[static_cast<std::size_t>(m - j)];
    }
    b[static_cast<std::size_t>(m)] = -inv * sum;
  }
  return make_truncated(std::move(b), s.center());
}

PowerSeries exp_series(const PowerSeries& s, int order) {
  check_order(order);
  const int n = s.truncation_order();
  std::vector<complex> g(static_cast<std::size_t>(order) + 1);
  g[0] = std::exp(s.coeff(0));
  for (int m = 1; m <= order; ++m) {
    complex sum{};
    for (int j = 1; j <= std::min(m, n); ++j) {
      sum += static_cast<double>(j) * s.coeff(static_cast<std::size_t>(j)) *
             g[static_cast<std::size_t>(m - j)];
    }
    g[static_cast<std::size_t>(m)] = sum / static_cast<double>(m);
  }
  return make_truncated(std::move(g), s.center());
}

PowerSeries rational_expansion(const PowerSeries& numer, const PowerSeries& denom, complex center,
                               int order) {
  check_order(order);
  if (!numer.is_exact() || !denom.is_exact()) {
    throw Error(ErrorCode::InvalidInput, "rational expansion needs exact numerator and denominator");
  }
  const PowerSeries d = recenter(denom, center);
  if (d.coeff(0) == complex{}) {
    throw Error(ErrorCode::DivisionBySingularSeries, "denominator vanishes at the center");
  }
  const PowerSeries q = multiply(recenter(numer, center), reciprocal(d, order), order);
  return make_truncated(std::vector<complex>(q.coeffs().begin(), q.coeffs().end()), center);
}

}  // namespace modcone
