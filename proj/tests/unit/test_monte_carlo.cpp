#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "redd/monte_carlo.hpp"
#include "redd/rng.hpp"

using namespace redd;

TEST(Rng, DeterministicStreams) {
  Rng a(42), b(42), c = Rng::for_stream(42, 1);
  for (int i = 0; i < 100; ++i) {
    const double x = a.normal();
    EXPECT_EQ(x, b.normal());
  }
  EXPECT_NE(Rng::for_stream(42, 0).uniform(), c.uniform());
  EXPECT_NE(Rng(1).uniform(), Rng(2).uniform());
}

TEST(Rng, Moments) {
  Rng r(7);
  const int n = 200000;
  double s = 0, s2 = 0, umin = 1, umax = 0;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal();
    s += z;
    s2 += z * z;
    const double u = r.uniform();
    umin = std::min(umin, u);
    umax = std::max(umax, u);
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.015);
  EXPECT_GE(umin, 0.0);
  EXPECT_LT(umax, 1.0);
}

TEST(Goe, SampleIsSymmetricAndShifted) {
  Rng r(3);
  GOESample s = sample_goe(4, 1.5, 2.0, r);
  EXPECT_EQ(s.a.rows(), 4);
  EXPECT_TRUE(s.a.isApprox(s.a.transpose(), 0.0));
  EXPECT_NEAR(goe_det(s.a), s.a.determinant(), 1e-10 * std::max(1.0, std::abs(s.a.determinant())));
  EXPECT_THROW(sample_goe(0, 0.0, 1.0, r), std::invalid_argument);
  EXPECT_THROW(sample_goe(2, 0.0, 0.0, r), std::invalid_argument);
}

TEST(Tensor, BombieriVarianceAndSampling) {
  EXPECT_DOUBLE_EQ(bombieri_variance({0, 0, 0}, 2, 3), 1.0);
  EXPECT_DOUBLE_EQ(bombieri_variance({0, 0, 1}, 2, 3), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(bombieri_variance({0, 0, 1, 1}, 2, 4), 1.0 / 6.0);
  Rng r(11);
  SymTensor t = sample_bombieri_tensor(3, 3, r);
  EXPECT_EQ(t.values.size(), 10u);  // C(3+3-1, 3)
  EXPECT_EQ(t.at({2, 0, 1}), t.at({0, 1, 2}));
}

TEST(Tensor, EigenpairFormOfAMatrix) {
  // a x1^2 + 2 b x1 x2 + c x2^2: f = -b x1^2 + (a - c) x1 x2 + b x2^2
  SymTensor v{2, 2, {{{0, 0}, 1.0}, {{0, 1}, 2.0}, {{1, 1}, 4.0}}};
  EigenpairForm f = eigenpair_form_n2(v);
  EXPECT_EQ(f.form.coeffs, (std::vector<double>{2.0, -3.0, -2.0}));
  // a symmetric 2x2 matrix always has two real eigenvector lines
  EXPECT_EQ(count_real_projective_roots(f.form).count, 2);
  EXPECT_THROW(eigenpair_form_n2(SymTensor{3, 2, {}}), std::invalid_argument);
}

TEST(Tensor, RootCounting) {
  EXPECT_EQ(count_real_projective_roots({3, {6, -7, 0, 1}}).count, 3);
  EXPECT_EQ(count_real_projective_roots({2, {1, 0, 1}}).count, 0);
  RootCount dbl = count_real_projective_roots({2, {1, -2, 1}});
  EXPECT_EQ(dbl.count, 1);
  EXPECT_TRUE(dbl.multiple_root);
  EXPECT_EQ(count_real_projective_roots({2, {0, 1, 0}}).count, 2);  // x1 x2
  EXPECT_THROW(count_real_projective_roots({2, {0, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(count_real_projective_roots({2, {1, 0}}), std::invalid_argument);
}

TEST(Estimator, NamesRoundTrip) {
  for (auto e : {Estimand::goe_absdet, Estimand::goe_det, Estimand::redd_goe_route, Estimand::redd_goe_route_rescaled,
                 Estimand::redd_n2}) {
    EXPECT_EQ(parse_estimand(estimand_name(e)), e);
  }
  EXPECT_FALSE(parse_estimand("nope").has_value());
}

TEST(Estimator, ValidationErrors) {
  EXPECT_THROW(estimate({Estimand::goe_absdet, 2, 0.0, 1.0, 2}, 99, 0, 1), std::invalid_argument);
  EXPECT_THROW(estimate({Estimand::goe_absdet, 2, 0.0, 1.0, 2}, 1000, 0, 0), std::invalid_argument);
  EXPECT_THROW(estimate({Estimand::redd_n2, 3, 0.0, 1.0, 3}, 1000, 0, 1), std::invalid_argument);
  EXPECT_THROW(estimate({Estimand::redd_goe_route, 2, 0.0, 1.0, 1}, 1000, 0, 1), std::invalid_argument);
}

TEST(Estimator, ReproducibleJson) {
  EstimandSpec s{Estimand::goe_det, 3, 0.5, 1.0, 2};
  auto a = estimate(s, 5000, 9, 2), b = estimate(s, 5000, 9, 2);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  auto j = a.to_json();
  for (const char* key : {"estimand", "params", "mean", "stderr", "n_samples", "seed", "workers"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  // doubles round-trip bit-exactly
  EXPECT_EQ(nlohmann::json::parse(j.dump())["mean"].get<double>(), a.mean);
}

TEST(Estimator, HistogramForTensorCounts) {
  auto r = estimate({Estimand::redd_n2, 2, 0.0, 1.0, 4}, 2000, 5, 1);
  ASSERT_TRUE(r.histogram.has_value());
  std::int64_t total = 0;
  for (const auto& [count, freq] : r.histogram->bins) {
    EXPECT_EQ(count % 2, 0);
    total += freq;
  }
  EXPECT_EQ(total, 2000);
  EXPECT_EQ(r.histogram->to_csv().rfind("count,frequency\n", 0), 0u);
}

TEST(Estimator, ReferencesAndZScore) {
  EstimandSpec even{Estimand::goe_det, 2, 1.0, 1.0, 2};
  auto ref = closed_form_reference(even, 1000, 0, 1);
  ASSERT_TRUE(ref.has_value());
  EXPECT_DOUBLE_EQ(ref->value, 0.5);  // u^2 - 1/2
  EXPECT_EQ(ref->std_error, 0.0);
  EXPECT_FALSE(closed_form_reference({Estimand::goe_det, 3, 1.0, 1.0, 2}, 1000, 0, 1).has_value());
  auto route = closed_form_reference({Estimand::redd_goe_route, 2, 0.0, 1.0, 3}, 1000, 0, 1);
  ASSERT_TRUE(route.has_value());
  EXPECT_NEAR(route->value, std::sqrt(7.0), 1e-13);

  EstimatorResult r;
  r.mean = 2.0;
  EXPECT_EQ(z_score(r, Reference{2.0, 0.0, ""}), 0.0);
  r.std_error = 0.5;
  EXPECT_DOUBLE_EQ(z_score(r, Reference{1.0, 0.0, ""}), 2.0);
  EXPECT_NE(companion_seed(0), 0u);
}
