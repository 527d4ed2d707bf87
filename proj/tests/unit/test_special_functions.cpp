#include <gtest/gtest.h>

#include <cmath>

#include "redd/oracles.hpp"
#include "redd/special_functions.hpp"

using namespace redd;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(5, 3), 0), 1);
  EXPECT_EQ(pochhammer(Rational(3), 2), 12);
  EXPECT_EQ(pochhammer(Rational(-2), 3), 0);
  RatFunc p = RatFunc::p();
  EXPECT_EQ(pochhammer(p, 2), p * (p + RatFunc(1)));
}

TEST(Hermite, SmallDegrees) {
  EXPECT_EQ(hermite(HermiteKind::probabilist, 0), PolyQ{1});
  EXPECT_EQ(hermite(HermiteKind::probabilist, 2), (PolyQ{-1, 0, 1}));
  EXPECT_EQ(hermite(HermiteKind::physicist, 2), (PolyQ{-2, 0, 4}));
  EXPECT_EQ(hermite(HermiteKind::probabilist, 3), (PolyQ{0, -3, 0, 1}));
}

TEST(Hypergeometric, KummerAndGauss) {
  EXPECT_EQ(kummer_m_poly(0, Rational(7, 2)), PolyQ{1});
  EXPECT_EQ(kummer_m_poly(-1, Rational(3, 2)), (PolyQ{Rational(1), Rational(-2, 3)}));
  EXPECT_THROW(kummer_m_poly(-2, Rational(0)), InvalidDenominator);
  EXPECT_EQ(gauss_f_poly(-1, -1, Rational(1, 2)), (PolyQ{1, 2}));
  EXPECT_EQ(gauss_f_poly(-3, Rational(5, 2), Rational(1, 2)).degree(), 3);
  EXPECT_EQ(gauss_f_poly(-4, -2, Rational(1, 2)).degree(), 2);
  EXPECT_EQ(gauss_f_poly(-2, 4, Rational(1, 2))(Rational(0)), 1);
  EXPECT_THROW(gauss_f_poly(-3, -3, Rational(-1)), InvalidDenominator);
  EXPECT_THROW(gauss_f_poly(1, 2, Rational(3)), UnsupportedCase);
}

TEST(GammaHalf, ValuesAndDomain) {
  EXPECT_EQ(gamma_half(Rational(1, 2)), PiScalar(1, 1));
  EXPECT_EQ(gamma_half(Rational(3, 2)), PiScalar(Rational(1, 2), 1));
  EXPECT_EQ(gamma_half(Rational(5, 2)), PiScalar(Rational(3, 4), 1));
  EXPECT_EQ(gamma_half(Rational(5)), PiScalar(24));
  EXPECT_THROW(gamma_half(Rational(0)), std::domain_error);
  EXPECT_THROW(gamma_half(Rational(1, 3)), std::domain_error);
  EXPECT_THROW(gamma_half(Rational(-1, 2)), std::domain_error);
}

TEST(NormalCdf, AnchorsAndAccuracy) {
  EXPECT_EQ(std_normal_cdf(0.0), 0.5);
  EXPECT_EQ(error_function(0.0), 0.0);
  for (double x : {-8.0, -3.3, -0.7, 0.2, 1.9, 5.0}) {
    EXPECT_NEAR(std_normal_cdf(x), 0.5 * std::erfc(-x / std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(2.0 * std_normal_cdf(x), 1.0 + error_function(x / std::sqrt(2.0)), 1e-12);
  }
  // far tail keeps relative accuracy
  EXPECT_NEAR(std_normal_cdf(-10.0) / 7.61985302416e-24, 1.0, 1e-10);
}

TEST(GaussianMoments, ExactIntegrals) {
  EXPECT_EQ(gaussian_moment_integral(PolyQ{1}, 1), sqrt_pi());
  EXPECT_EQ(gaussian_moment_integral(PolyQ{0, 0, 1}, 1), PiScalar(Rational(1, 2), 1));
  EXPECT_EQ(gaussian_moment_integral(PolyQ{0, 0, 0, 0, 1}, Rational(1, 2)), PiScalar(3, 1, 1));
  EXPECT_THROW(gaussian_moment_integral(PolyQ{1}, 2), std::domain_error);
  PolyQ he0 = hermite(HermiteKind::probabilist, 0), he2 = hermite(HermiteKind::probabilist, 2);
  EXPECT_EQ(-gaussian_moment_integral(he0 * he2, 1), PiScalar(Rational(1, 2), 1));
}

TEST(Expectations, HermiteEven) {
  EXPECT_EQ(expect_hermite_even(0, Rational(3)), 1);
  EXPECT_EQ(expect_hermite_even(4, Rational(1, 2)), 0);
  EXPECT_EQ(expect_hermite_even(1, Rational(1)), 2);
  EXPECT_EQ(expect_hermite_even(2, Rational(1)), 12);  // E(16u^4 - 48u^2 + 12) = 48 - 48 + 12
}

TEST(Expectations, PkProductCases) {
  EXPECT_NEAR(expect_pk_product(0, 0, 1).value(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(expect_pk_product(-1, 1, 1).value(), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(expect_pk_product(-1, 1, 1).value(), oracle::pk_product_quadrature(-1, 1, 1.0), 1e-10);
  EXPECT_NEAR(expect_pk_product(3, 5, Rational(3, 2)).value(), oracle::pk_product_quadrature(3, 5, 1.5), 1e-9);
  EXPECT_NEAR(expect_pk_product(0, 6, Rational(1, 3)).value(), oracle::pk_product_quadrature(0, 6, 1.0 / 3.0),
              1e-10);
  EXPECT_THROW(expect_pk_product(1, 2, 1), UnsupportedCase);
  EXPECT_THROW(expect_pk_product(-1, 2, 1), UnsupportedCase);
  EXPECT_THROW(expect_pk_product(0, 0, 0), std::domain_error);
}

TEST(PkFamily, WeightedBranchAndG) {
  for (double x : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
    EXPECT_NEAR(pk_weighted(-1, x), pk_value(-1, x) * std::exp(-0.5 * x * x), 1e-13);
    EXPECT_NEAR(pk_weighted(3, x), (x * x * x - 3 * x) * std::exp(-0.5 * x * x), 1e-13);
  }
  // far left tail of P_{-1} weight: -sqrt(2 pi) Phi(x) stays finite
  EXPECT_TRUE(std::isfinite(pk_weighted(-1, -40.0)));
  EXPECT_NEAR(g_closed(0, 0.0), std::sqrt(2.0 * M_PI) / 2.0, 1e-14);
  EXPECT_NEAR(g_closed(2, 1.0), -std::exp(-0.5), 1e-14);
}
