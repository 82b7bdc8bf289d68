#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "modcone/ray_oracle.hpp"
#include "test_support.hpp"

using namespace modcone;
using modcone::testing::kOmega;

namespace {

constexpr double pi = std::numbers::pi;

PowerSeries paper_expansion(int order) {
  return rational_expansion(make_polynomial({1.0}), make_polynomial({1.0, 0.0, 0.0, -kOmega}), 0.0, order);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no modcone::Error thrown";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(SampleRay, PaperExampleDirections) {
  const auto s = paper_expansion(30);
  const auto up = sample_ray(s, 0.0, 0.1, 16, SampleMode::Modulus);
  EXPECT_EQ(up.empirical_verdict, EmpiricalVerdict::Ascent);
  const auto down = sample_ray(s, pi / 4, 0.1, 16, SampleMode::Modulus);
  EXPECT_EQ(down.empirical_verdict, EmpiricalVerdict::Descent);
}

TEST(SampleRay, RealPartOfIdentity) {
  const auto r = sample_ray(make_polynomial({0.0, 1.0}), 0.0, 1.0, 16, SampleMode::RealPart);
  EXPECT_EQ(r.empirical_verdict, EmpiricalVerdict::Ascent);
  ASSERT_EQ(r.radii.size(), 16u);
  EXPECT_DOUBLE_EQ(r.radii.front(), 1.0);
  EXPECT_DOUBLE_EQ(r.radii.back(), std::ldexp(1.0, -15));
  for (std::size_t i = 0; i < r.radii.size(); ++i) EXPECT_DOUBLE_EQ(r.deltas[i], r.radii[i]);
}

TEST(SampleRay, GridAndVerdictInvariants) {
  const auto s = make_polynomial({-1.0, 1.0});
  for (double theta : {0.0, 1.0, pi / 2 - 0.03, pi}) {
    const auto r = sample_ray(s, theta, 0.25, 12, SampleMode::Modulus);
    for (std::size_t i = 1; i < r.radii.size(); ++i) EXPECT_LT(r.radii[i], r.radii[i - 1]);
    const bool pos = std::all_of(r.deltas.begin(), r.deltas.end(), [](double d) { return d > 0; });
    const bool neg = std::all_of(r.deltas.begin(), r.deltas.end(), [](double d) { return d < 0; });
    EXPECT_EQ(r.empirical_verdict == EmpiricalVerdict::Ascent, pos);
    EXPECT_EQ(r.empirical_verdict == EmpiricalVerdict::Descent, neg);
  }
  // Large t crosses the circle |z - 1| = 1 just inside the descent sector.
  EXPECT_EQ(sample_ray(s, pi / 2 - 0.05, 0.25, 16, SampleMode::Modulus).empirical_verdict, EmpiricalVerdict::Mixed);
}

TEST(SampleRay, TooFewSamples) {
  EXPECT_EQ(code_of([] { sample_ray(make_polynomial({0.0, 1.0}), 0.0, 1.0, 7, SampleMode::Modulus); }),
            ErrorCode::InvalidInput);
}

TEST(RaySample, EventualVerdict) {
  RaySample r;
  r.deltas = {1.0, 2.0, -1.0, -1.0, -1.0, -1.0};
  EXPECT_EQ(r.eventual_verdict(4), EmpiricalVerdict::Descent);
  EXPECT_EQ(r.eventual_verdict(5), EmpiricalVerdict::Mixed);
  r.deltas = {1.0, 0.0};
  EXPECT_EQ(r.eventual_verdict(1), EmpiricalVerdict::Mixed);
}

TEST(Compare, LinearAllNonSkippedMatch) {
  const auto s = make_polynomial({-1.0, 1.0});
  const auto report = compare(holomorphic_cone(s), s, {360, 0.25, 0.02, 16});
  EXPECT_TRUE(report.mismatches.empty());
  EXPECT_EQ(report.angles_tested, 360);
  EXPECT_EQ(report.matches + report.skipped_near_boundary, 360);
  EXPECT_GT(report.matches, 340);
}

TEST(Compare, AllAscentMatchesEverywhere) {
  const auto s = make_polynomial({0.0, 1.0});
  const auto report = compare(holomorphic_cone(s), s, {90, 0.5, 0.0, 16});
  EXPECT_EQ(report.matches, 90);
  EXPECT_EQ(report.skipped_near_boundary, 0);
}

TEST(Compare, PaperExample) {
  const auto s = paper_expansion(60);
  const auto report = compare(holomorphic_cone(s), s, {360, 0.05, 0.02, 16});
  EXPECT_TRUE(report.mismatches.empty());
  EXPECT_EQ(report.matches + report.skipped_near_boundary, 360);
}

TEST(Compare, WrongPredictionIsReported) {
  const auto s = make_polynomial({-1.0, 1.0});
  auto d = holomorphic_cone(s);
  for (auto& arc : d.arcs) arc.label = arc.label == ArcLabel::Ascent ? ArcLabel::Descent : ArcLabel::Ascent;
  const auto report = compare(d, s, {36, 0.01, 0.02, 16});
  EXPECT_EQ(report.matches, 0);
  EXPECT_EQ(static_cast<int>(report.mismatches.size()) + report.skipped_near_boundary, 36);
}

TEST(Compare, ParallelMatchesSerial) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto s = make_polynomial(modcone::testing::random_coeffs(rng, 3 + trial, 1 + trial % 3));
    const auto d = holomorphic_cone(s);
    const CompareOptions opts{720, 0.05, 0.01, 16};
    const auto a = compare(d, s, opts);
    const auto b = compare_serial(d, s, opts);
    EXPECT_EQ(a.matches, b.matches);
    EXPECT_EQ(a.skipped_near_boundary, b.skipped_near_boundary);
    ASSERT_EQ(a.mismatches.size(), b.mismatches.size());
    for (std::size_t i = 0; i < a.mismatches.size(); ++i) EXPECT_EQ(a.mismatches[i].angle, b.mismatches[i].angle);
  }
}

TEST(Compare, OracleTheoremAgreementProperty) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 8;
    const int k = std::uniform_int_distribution<int>(1, d)(rng);
    const auto s = make_polynomial(modcone::testing::random_coeffs(rng, d, k));
    const auto report = compare(holomorphic_cone(s), s, {360, default_t_max(s), 0.02, 16});
    EXPECT_TRUE(report.mismatches.empty()) << "trial " << trial;
    EXPECT_EQ(report.matches + static_cast<int>(report.mismatches.size()) + report.skipped_near_boundary,
              report.angles_tested);
  }
}

TEST(Compare, HarmonicAgreement) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 8;
    const int k = std::uniform_int_distribution<int>(1, d)(rng);
    const auto f = make_polynomial(modcone::testing::random_coeffs(rng, d, k));
    const auto report = compare(harmonic_cone(f), f, {360, default_t_max(f), 0.02, 16});
    EXPECT_TRUE(report.mismatches.empty()) << "trial " << trial;
  }
}

TEST(SampleRay, MonotoneRefinementProperty) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 8;
    const int k = std::uniform_int_distribution<int>(1, d)(rng);
    const auto s = make_polynomial(modcone::testing::random_coeffs(rng, d, k));
    const auto cone = holomorphic_cone(s);
    const double t = default_t_max(s);
    for (int i = 0; i < 360; ++i) {
      const double theta = kTwoPi * i / 360;
      if (cone.distance_to_boundary(theta) < 0.05) continue;
      const auto coarse = sample_ray(s, theta, t, 16, SampleMode::Modulus);
      if (coarse.empirical_verdict == EmpiricalVerdict::Mixed) continue;
      const auto fine = sample_ray(s, theta, t / 4, 16, SampleMode::Modulus);
      EXPECT_EQ(fine.empirical_verdict, coarse.empirical_verdict) << "trial " << trial << " theta " << theta;
    }
  }
}

TEST(DefaultTMax, ScalesWithRootSize) {
  EXPECT_DOUBLE_EQ(default_t_max(paper_expansion(7)), 1e-2);
  EXPECT_DOUBLE_EQ(default_t_max(make_polynomial({-1.0, 1.0})), 1e-2);
  // z - 100: Fujiwara bound 2 * (100/2) = 100.
  EXPECT_NEAR(default_t_max(make_polynomial({-100.0, 1.0})), 1.0, 1e-12);
}

TEST(FindNearbyZero, Identity) {
  const complex w = find_nearby_zero(make_polynomial({0.0, 1.0}), 1e-3, 64);
  EXPECT_LE(std::abs(w.real()), 1e-12);
  EXPECT_NEAR(std::abs(w.imag()), 1e-3, 1e-15);
}

TEST(FindNearbyZero, Square) {
  const complex w = find_nearby_zero(make_polynomial({0.0, 0.0, 1.0}), 0.01, 64);
  const double a = std::arg(w);
  // Odd multiple of pi/4.
  const double m = a / (pi / 4);
  EXPECT_NEAR(m, std::round(m), 1e-9);
  EXPECT_EQ(static_cast<long>(std::round(m)) % 2 != 0, true);
  EXPECT_NEAR(std::abs(w), 0.01, 1e-15);
}

TEST(FindNearbyZero, Cube) {
  const auto f = make_polynomial({0.0, 0.0, 0.0, 1.0});
  const complex w = find_nearby_zero(f, 0.1, 128);
  EXPECT_LE(std::abs(std::cos(3 * std::arg(w))), 1e-9);
  EXPECT_LE(std::abs(std::pow(w, 3).real()), 1e-12);
}

TEST(FindNearbyZero, Errors) {
  EXPECT_EQ(code_of([] { find_nearby_zero(make_polynomial({1.0, 1.0}), 0.1, 16); }), ErrorCode::InvalidInput);
  // u = 1e-13 + r^8 cos(8 theta) with r^8 = 1e-24 stays positive on the probe circle.
  EXPECT_EQ(code_of([] {
              std::vector<complex> a(9);
              a[0] = 1e-13;
              a[8] = 1.0;
              find_nearby_zero(make_polynomial(a), 1e-3, 64);
            }),
            ErrorCode::ZeroNotBracketed);
}

TEST(FindNearbyZero, BisectionContractProperty) {
  std::mt19937_64 rng(28);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 8;
    const int k = std::uniform_int_distribution<int>(1, d)(rng);
    auto a = modcone::testing::random_coeffs(rng, d, k);
    a[0] = {0.0, u(rng)};
    const auto f = make_polynomial(a);
    const double radius = 1e-2;
    const complex w = find_nearby_zero(f, radius, 64);
    EXPECT_NEAR(std::abs(w), radius, 1e-14);
    double circle_max = 0.0;
    for (int i = 0; i < 64; ++i) circle_max = std::max(circle_max, std::abs(evaluate(f, std::polar(radius, kTwoPi * i / 64)).real()));
    EXPECT_LE(std::abs(evaluate(f, w).real()), 1e-6 * circle_max);
  }
}
