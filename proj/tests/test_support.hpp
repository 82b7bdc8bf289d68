#pragma once

// Random generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "modcone/series.hpp"

namespace modcone::testing {

inline const complex kOmega = std::polar(1.0, std::numbers::pi / 4);

inline complex random_unit_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

/// Coefficients a_0..a_degree in the unit box, |a_0| >= 0.1, a_1..a_{k-1} = 0,
/// |a_k| >= 0.1 and a nonzero leading coefficient.
inline std::vector<complex> random_coeffs(std::mt19937_64& rng, int degree, int k) {
  std::vector<complex> a(static_cast<std::size_t>(degree) + 1);
  for (auto& c : a) c = random_unit_box(rng);
  while (std::abs(a[0]) < 0.1) a[0] = random_unit_box(rng);
  for (int j = 1; j < k; ++j) a[static_cast<std::size_t>(j)] = {};
  while (std::abs(a[static_cast<std::size_t>(k)]) < 0.1) a[static_cast<std::size_t>(k)] = random_unit_box(rng);
  while (std::abs(a.back()) < 0.1) a.back() = random_unit_box(rng);
  return a;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Direct summation of sum_j a_j (z - z0)^j with explicit powers.
inline complex direct_sum(const std::vector<complex>& a, complex z0, complex z) {
  complex sum{};
  for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * std::pow(z - z0, static_cast<int>(j));
  return sum;
}

/// Coefficients of p(x + d) by binomial expansion of every monomial.
inline std::vector<complex> binomial_shift(const std::vector<complex>& a, complex d) {
  std::vector<complex> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      b[j] += a[n] * binomial(static_cast<int>(n), static_cast<int>(j)) *
              std::pow(d, static_cast<int>(n - j));
    }
  }
  return b;
}

/// Maclaurin coefficients of |p(z0 + t e^{i theta})|^2 by multiplying the
/// explicit polynomials p(t) and conj(p)(t) in t.
inline std::vector<double> brute_modulus_square(const std::vector<complex>& a, double theta) {
  const std::size_t n = a.size() - 1;
  std::vector<double> c(2 * n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const complex pi = a[i] * std::exp(complex(0.0, static_cast<double>(i) * theta));
      const complex pj = std::conj(a[j] * std::exp(complex(0.0, static_cast<double>(j) * theta)));
      c[i + j] += (pi * pj).real();
    }
  }
  return c;
}

/// Roots from the eigenvalues of the companion matrix.
std::vector<complex> companion_roots(const std::vector<complex>& a);

/// Random monic polynomial with roots in the disc of radius `spread` and
/// pairwise separation >= `min_sep`; returns coefficients and roots.
inline std::pair<std::vector<complex>, std::vector<complex>> random_separated_monic(
    std::mt19937_64& rng, int degree, double spread, double min_sep) {
  std::uniform_real_distribution<double> r(0.0, 1.0);
  std::vector<complex> roots;
  while (static_cast<int>(roots.size()) < degree) {
    const complex z = std::polar(spread * std::sqrt(r(rng)), 2 * std::numbers::pi * r(rng));
    bool ok = true;
    for (complex w : roots) ok = ok && std::abs(z - w) >= min_sep;
    if (ok) roots.push_back(z);
  }
  std::vector<complex> coeffs{1.0};
  for (complex w : roots) {
    std::vector<complex> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= w * coeffs[i];
    }
    coeffs = next;
  }
  return {coeffs, roots};
}

}  // namespace modcone::testing
