#pragma once

#include <stdexcept>

#include "redd/exact/pi_scalar.hpp"
#include "redd/exact/polynomial.hpp"
#include "redd/exact/ratfunc.hpp"

namespace redd {

/// (c)_k vanished inside a truncating hypergeometric series.
class InvalidDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters outside the cases with a known closed form.
class UnsupportedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rising factorial x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, int n);
RatFunc pochhammer(const RatFunc& x, int n);

enum class HermiteKind { probabilist, physicist };

/// He_k (probabilist) or H_k (physicist) via the three-term recurrence.
PolyQ hermite(HermiteKind kind, int k);

/// M(a, c, x) = sum_k (a)_k/(c)_k x^k/k! for a in {0, -1, ...}.
PolyQ kummer_m_poly(int a, const Rational& c);

/// F(a, b, c, x) truncated at min over the non-positive integers among {-a, -b}.
PolyQ gauss_f_poly(const Rational& a, const Rational& b, const Rational& c);

/// Gamma at a positive multiple of 1/2.
PiScalar gamma_half(const Rational& x);

double std_normal_cdf(double x);
double error_function(double x);

/// Integral over R of f(x) exp(-alpha x^2), alpha in {1/2, 1}.
PiScalar gaussian_moment_integral(const PolyQ& f, const Rational& alpha);

/// E H_{2k}(u) for u ~ N(0, sigma2).
Rational expect_hermite_even(int k, const Rational& sigma2);

/// coeff * sqrt(radicand).
struct QuadraticSurd {
  Rational coeff;
  Rational radicand;
  double value() const;
};

/// E P_k(u) P_l(u) exp(-u^2/2) for u ~ N(0, sigma2).
///
/// Supported: k, l >= 0 with k + l even, and k = -1 with l odd. Both results
/// are rational multiples of 1/sqrt(1 + sigma2).
QuadraticSurd expect_pk_product(int k, int l, const Rational& sigma2);

/// P_k(x): He_k(x) for k >= 0, and -sqrt(2 pi) exp(x^2/2) Phi(x) for k = -1.
double pk_value(int k, double x);

/// P_k(x) exp(-x^2/2), computed without the exp(x^2/2) overflow at k = -1.
double pk_weighted(int k, double x);

/// G_k(x) = integral_{-inf}^x P_k(y) exp(-y^2/2) dy, closed form, k >= 0.
double g_closed(int k, double x);

}  // namespace redd
