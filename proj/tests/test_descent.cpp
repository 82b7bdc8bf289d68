#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "modcone/descent.hpp"
#include "modcone/ray_oracle.hpp"
#include "test_support.hpp"

using namespace modcone;

namespace {

constexpr double pi = std::numbers::pi;

void expect_strictly_decreasing(const SolverResult& r) {
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    EXPECT_LT(r.trace[i].modulus, r.trace[i - 1].modulus) << "step " << i;
  }
}

}  // namespace

TEST(DescentDirection, Examples) {
  const auto a = descent_direction(make_polynomial({-1.0, 1.0}), 0.0);
  EXPECT_EQ(a.k, 1);
  EXPECT_NEAR(angular_distance(a.theta, 0.0), 0.0, 1e-15);

  const auto b = descent_direction(make_polynomial({0.0, 0.0, 1.0}), 1.0);
  EXPECT_EQ(b.k, 1);
  EXPECT_NEAR(b.theta, pi, 1e-15);

  const auto c = descent_direction(make_polynomial({1.0, 0.0, 1.0}), 0.0);
  EXPECT_EQ(c.k, 2);
  EXPECT_NEAR(c.theta, pi / 2, 1e-15);
}

TEST(DescentDirection, SampledRayDescendsProperty) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 8;
    const auto p = make_polynomial(modcone::testing::random_coeffs(rng, d, 1));
    const complex z = modcone::testing::random_unit_box(rng);
    if (std::abs(evaluate(p, z)) < 1e-6) continue;
    const auto dir = descent_direction(p, z);
    const auto local = recenter(p, z);
    const auto sample = sample_ray(local, dir.theta, 1e-4, 16, SampleMode::Modulus);
    EXPECT_EQ(sample.empirical_verdict, EmpiricalVerdict::Descent) << "trial " << trial;
  }
}

TEST(Descend, SquareMinusOne) {
  const auto r = descend(make_polynomial({-1.0, 0.0, 1.0}), 2.0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.status, SolverStatus::Converged);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_LE(std::abs(r.root - 1.0), 1e-9);
  expect_strictly_decreasing(r);
  EXPECT_EQ(r.trace.front().z, complex(2.0));
  EXPECT_EQ(static_cast<int>(r.trace.size()), r.iterations + 1);
}

TEST(Descend, CubeRootsOfUnity) {
  const auto r = descend(make_polynomial({-1.0, 0.0, 0.0, 1.0}), {0.5, 0.5});
  ASSERT_TRUE(r.converged);
  EXPECT_LE(std::abs(std::pow(r.root, 3) - 1.0), 1e-10);
  double best = 1e9;
  for (int j = 0; j < 3; ++j) best = std::min(best, std::abs(r.root - std::polar(1.0, 2 * pi * j / 3)));
  EXPECT_LE(best, 1e-5);
  expect_strictly_decreasing(r);
}

TEST(Descend, LinearRandom) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const complex c = 3.0 * modcone::testing::random_unit_box(rng);
    const auto r = descend(make_polynomial({-c, 1.0}), 0.0);
    ASSERT_TRUE(r.converged);
    EXPECT_LE(std::abs(r.root - c), 1e-10);
    EXPECT_LE(r.iterations, 500);
  }
}

TEST(Descend, MaxItersExceededKeepsBestIterate) {
  SolverOptions opts;
  opts.max_iters = 3;
  const auto r = descend(make_polynomial({-1.0, 0.0, 0.0, 1.0}), {0.5, 0.5}, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.status, SolverStatus::MaxItersExceeded);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_EQ(r.root, r.trace.back().z);
  EXPECT_LT(r.residual, r.trace.front().modulus);
}

TEST(Descend, ShrinkBudgetExhausted) {
  SolverOptions opts;
  opts.tol_residual = 0.0;
  opts.max_shrinks_per_iter = 2;
  opts.initial_step = 10.0;
  const auto r = descend(make_polynomial({-1.0, 1.0}), 0.0, opts);
  EXPECT_EQ(r.status, SolverStatus::NonDecreasingStep);
  EXPECT_FALSE(r.converged);
}

TEST(Descend, Errors) {
  EXPECT_THROW(descend(make_polynomial({2.0}), 0.0), Error);
  EXPECT_THROW(descend(make_truncated({1.0, 1.0}), 0.0), Error);
  SolverOptions bad;
  bad.step_shrink = 1.0;
  EXPECT_THROW(descend(make_polynomial({-1.0, 1.0}), 0.0, bad), Error);
}

TEST(Descend, StartAtRootConvergesImmediately) {
  const auto r = descend(make_polynomial({-1.0, 1.0}), 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.trace.size(), 1u);
}

TEST(Descend, RootsAgreeWithCompanionMatrixOracle) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int converged = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 5;
    const auto [coeffs, roots] = modcone::testing::random_separated_monic(rng, d, 1.5, 0.5);
    const complex start = std::polar(2.0 * std::sqrt(u(rng)), 2 * pi * u(rng));
    const auto r = descend(make_polynomial(coeffs), start);
    expect_strictly_decreasing(r);
    if (!r.converged) continue;
    ++converged;
    EXPECT_LE(std::abs(evaluate(make_polynomial(coeffs), r.root)), 1e-10);
    double nearest = 1e9;
    for (complex w : modcone::testing::companion_roots(coeffs)) nearest = std::min(nearest, std::abs(w - r.root));
    EXPECT_LE(nearest, 1e-4) << "trial " << trial;
  }
  EXPECT_GE(converged, 27);
}
