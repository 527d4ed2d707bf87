#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "json.hpp"
#include "redd/edd_formula.hpp"
#include "redd/render.hpp"

using namespace redd;

TEST(ComplexCount, Values) {
  EXPECT_EQ(complex_edd(4, 4), 40);
  EXPECT_EQ(complex_edd(1, 7), 1);
  EXPECT_EQ(complex_edd(3, 2), 3);
  EXPECT_EQ(complex_edd(12, 10).get_str(), "35303692060");
  EXPECT_THROW(complex_edd(0, 3), std::domain_error);
}

TEST(ExpectedRedd, LowOrderClosedForms) {
  for (int p = 2; p <= 9; ++p) {
    EXPECT_NEAR(expected_redd_eval(2, p), std::sqrt(3.0 * p - 2.0), 1e-13);
    const double s = std::sqrt(p - 1.0), t = std::sqrt(3.0 * p - 2.0);
    EXPECT_NEAR(expected_redd_eval(3, p), 1 + 4 * s * s * s / t, 1e-12);
  }
  EXPECT_NEAR(expected_redd_eval(4, 3), 9.395116900515, 1e-11);
  EXPECT_NEAR(expected_redd_eval(5, 4), 32.9431795537, 1e-9);
  EXPECT_NEAR(expected_redd_eval(4, Rational(5, 2)), radical_eval(expected_redd_symbolic(4).expr, Rational(5, 2)), 1e-12);
}

TEST(ExpectedRedd, Domain) {
  EXPECT_THROW(expected_redd_symbolic(1), std::domain_error);
  EXPECT_THROW(expected_redd_eval(3, Rational(3, 2)), std::domain_error);
  EXPECT_THROW(emit_table(1, 4, TableFormat::text), std::domain_error);
  EXPECT_THROW(emit_table(5, 4, TableFormat::text), std::domain_error);
  EXPECT_THROW(emit_table(2, 13, TableFormat::text), std::domain_error);
}

TEST(ExpectedRedd, PiFreeAndSameFromThreads) {
  std::vector<std::thread> ts;
  std::vector<RadicalExpr> got(6);
  for (int k = 0; k < 6; ++k) ts.emplace_back([k, &got] { got[k] = expected_redd_symbolic(5 + k % 3).expr; });
  for (auto& t : ts) t.join();
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(got[k], expected_redd_symbolic(5 + k % 3).expr);
    EXPECT_EQ(got[k].pi_half, 0);
  }
}

TEST(Structure, OddAndEvenShapes) {
  StructureReport r3 = structural_decomposition(3);
  EXPECT_TRUE(r3.ok);
  EXPECT_EQ(r3.degrees, std::vector<int>{1});
  StructureReport r6 = structural_decomposition(6);
  EXPECT_TRUE(r6.ok) << r6.detail;
  EXPECT_EQ(r6.degrees, (std::vector<int>{4, 0, 1, 2}));
}

TEST(Structure, FitPolynomialIn) {
  const RatFunc p = RatFunc::p();
  const RatFunc z = RatFunc(1) / p;
  auto h = fit_polynomial_in((p * p + RatFunc(3)) / (p * p), z, 3);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, (PolyQ{1, 0, 3}));
  EXPECT_FALSE(fit_polynomial_in(p, z, 4).has_value());
}

TEST(Table, Formats) {
  const std::string text = emit_table(2, 3, TableFormat::text);
  EXPECT_EQ(text, "E(2,p) = sqrt(3*p - 2)\nE(3,p) = 1 + 4*(p - 1)^(3/2)/sqrt(3*p - 2)\n");
  const std::string tex = emit_table(4, 4, TableFormat::latex);
  EXPECT_NE(tex.find("\\begin{tabular}"), std::string::npos);
  EXPECT_NE(tex.find("29p^{3} - 63p^{2} + 48p - 12"), std::string::npos);
  auto j = nlohmann::json::parse(emit_table(2, 5, TableFormat::json));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["n"], 2);
  EXPECT_EQ(j[2]["pi_half_exponent"], 0);
  EXPECT_EQ(j[0]["text"], "sqrt(3*p - 2)");
}

TEST(Render, JsonCoefficients) {
  auto j = radical_to_json(expected_redd_symbolic(2).expr);
  EXPECT_EQ(j["pi_half_exponent"], 0);
  EXPECT_EQ(j["basis"]["t"]["num_coeffs"], nlohmann::json::array({1}));
  EXPECT_EQ(integer_to_json(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(integer_to_json(Integer(42)), 42);
}
