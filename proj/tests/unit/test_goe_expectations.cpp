#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "redd/goe_expectations.hpp"
#include "redd/oracles.hpp"

using namespace redd;

TEST(GammaMinor, EmptyAndSmall) {
  EXPECT_EQ(gamma_minor_det({1, 1, 1, 1}), PiScalar(1));
  EXPECT_EQ(gamma_minor_det({2, 1, 0, 0}), PiScalar(1));
  EXPECT_EQ(gamma_minor_det({1, 2, 1, 1}), PiScalar(Rational(15, 8), 1));
  EXPECT_EQ(gamma_minor_det({2, 2, 0, 1}), gamma_half(Rational(3, 2)));
  EXPECT_THROW(gamma_minor_det({1, 2, 0, 1}), std::out_of_range);
  EXPECT_THROW(gamma_minor_det({2, 2, 2, 0}), std::out_of_range);
  EXPECT_THROW(gamma_minor_det({3, 2, 1, 1}), std::out_of_range);
}

TEST(GammaMinor, HalfProduct) {
  // Gamma(1/2) Gamma(1) Gamma(3/2) = pi/2
  EXPECT_EQ(gamma_half_product(3), PiScalar(Rational(1, 2), 2));
}

TEST(DetExpectation, EvenClosedForm) {
  EXPECT_EQ(*j_even_closed(1).exact, (PolyQ{Rational(-1, 2), Rational(0), Rational(1)}));
  for (int m = 1; m <= 5; ++m) {
    auto j = j_even_closed(m);
    ASSERT_TRUE(j.exact.has_value());
    EXPECT_EQ(j.exact->degree(), 2 * m);
    EXPECT_EQ(j.exact->leading(), 1);
    EXPECT_EQ(*j.exact, oracle::wick_det_expectation(2 * m));
  }
}

TEST(AbsDet, LowDimensionalValues) {
  AbsDetValue one = abs_det_eval(1, 0.0);
  EXPECT_FALSE(one.j_exact);
  EXPECT_NEAR(one.correction, std::sqrt(2.0 / std::numbers::pi), 1e-15);
  // completing with J_1(0) = 0
  EXPECT_NEAR(abs_det_eval(1, 0.0, 0.0).value, 0.7978845608028654, 1e-15);
  EXPECT_NEAR(abs_det_eval(1, 2.0, -2.0).value, oracle::folded_normal_mean(-2.0, 1.0), 1e-13);

  AbsDetValue two = abs_det_eval(2, 0.0);
  EXPECT_TRUE(two.j_exact);
  EXPECT_NEAR(two.value, std::sqrt(2.0) - 0.5, 1e-14);
  EXPECT_NEAR(two.correction, std::sqrt(2.0), 1e-14);
}

TEST(AbsDet, ChannelShapes) {
  for (int n = 1; n <= 7; ++n) {
    AbsDetExpr e = abs_det_correction(n);
    EXPECT_EQ(e.n, n);
    EXPECT_EQ(e.j_even.has_value(), n % 2 == 0);
    EXPECT_LE(e.exp_channel.poly.degree(), 2 * n);
    if (n % 2 == 0) EXPECT_TRUE(e.phi_channel.poly.is_zero()) << n;
    else EXPECT_FALSE(e.phi_channel.poly.is_zero()) << n;
  }
}

TEST(AbsDet, AgreesWithDoubleAssembly) {
  for (int n = 1; n <= 6; ++n) {
    AbsDetExpr e = abs_det_correction(n);
    for (double u : {-3.0, -0.25, 0.0, 0.75, 2.0}) {
      const double want = oracle::correction_float(n, u);
      EXPECT_NEAR(abs_det_correction_eval(e, u), want, 1e-11 * std::max(1.0, std::abs(want))) << n << " " << u;
    }
  }
}

TEST(AbsDet, ConcurrentConstruction) {
  std::vector<std::thread> ts;
  std::vector<double> out(8);
  for (int k = 0; k < 8; ++k) {
    ts.emplace_back([k, &out] { out[k] = abs_det_eval(2 + k % 4, 0.5).correction; });
  }
  for (auto& t : ts) t.join();
  for (int k = 0; k < 8; ++k) EXPECT_DOUBLE_EQ(out[k], abs_det_eval(2 + k % 4, 0.5).correction);
}
