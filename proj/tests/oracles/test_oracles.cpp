#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "redd/oracles.hpp"

using namespace redd;

TEST(Oracle, RodriguesByHand) {
  EXPECT_EQ(oracle::hermite_rodrigues(HermiteKind::physicist, 1), (PolyQ{0, 2}));
  EXPECT_EQ(oracle::hermite_rodrigues(HermiteKind::physicist, 3), (PolyQ{0, -12, 0, 8}));
  EXPECT_EQ(oracle::hermite_rodrigues(HermiteKind::probabilist, 4), (PolyQ{3, 0, -6, 0, 1}));
}

TEST(Oracle, WickSmallCases) {
  EXPECT_EQ(oracle::wick_det_expectation(1), (PolyQ{0, -1}));
  EXPECT_EQ(oracle::wick_det_expectation(2), (PolyQ{Rational(-1, 2), Rational(0), Rational(1)}));
  // n = 3: -u^3 + (3/2) u
  EXPECT_EQ(oracle::wick_det_expectation(3), (PolyQ{Rational(0), Rational(3, 2), Rational(0), Rational(-1)}));
}

TEST(Oracle, FoldedNormal) {
  EXPECT_NEAR(oracle::folded_normal_mean(0.0, 1.0), std::sqrt(2.0 / std::numbers::pi), 1e-15);
  EXPECT_NEAR(oracle::folded_normal_mean(30.0, 1.0), 30.0, 1e-12);
  EXPECT_NEAR(oracle::folded_normal_mean(-1.0, 2.0), oracle::folded_normal_mean(1.0, 2.0), 1e-15);
}

TEST(Oracle, TwoByTwoQuadrature) {
  EXPECT_NEAR(oracle::abs_det_n2_quadrature(0.0), std::numbers::sqrt2 - 0.5, 1e-10);
  // far from the spectrum |det| = det: u^2 - 1/2
  EXPECT_NEAR(oracle::abs_det_n2_quadrature(8.0), 63.5, 1e-8);
}

TEST(Oracle, GaussianExpectationAndG) {
  EXPECT_NEAR(oracle::gaussian_expectation(2.5, [](double u) { return u * u; }), 2.5, 1e-12);
  EXPECT_NEAR(oracle::gaussian_expectation(0.5, [](double u) { return std::cos(u); }), std::exp(-0.25), 1e-12);
  EXPECT_NEAR(oracle::g_quadrature(0, 0.0), std::sqrt(2.0 * std::numbers::pi) / 2.0, 1e-12);
  EXPECT_NEAR(oracle::g_quadrature(1, 1.0), -std::exp(-0.5), 1e-12);
}

TEST(Oracle, ErfSeries) {
  for (double x : {-1.0, -0.3, 0.0, 0.6, 1.0}) EXPECT_NEAR(oracle::erf_series(x, 30), std::erf(x), 1e-14);
}

TEST(Oracle, FloatCorrectionLowOrder) {
  // n = 1: sqrt(2/pi) e^{-u^2/2} + 2 u Phi(u)
  for (double u : {-1.0, 0.0, 0.5}) {
    const double want = std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * u * u) + u * std::erfc(-u / std::sqrt(2.0));
    EXPECT_NEAR(oracle::correction_float(1, u), want, 1e-14);
  }
  EXPECT_NEAR(oracle::correction_float(2, 0.0), std::numbers::sqrt2, 1e-14);
}
