#include "redd/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace redd {

namespace {

std::optional<int> nonpositive_int(const Rational& a) {
  if (!a.is_integer() || a.sign() > 0) return std::nullopt;
  return static_cast<int>(-a.numerator().get_si());
}

}  // namespace

Rational pochhammer(const Rational& x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= x + Rational(i);
  return r;
}

RatFunc pochhammer(const RatFunc& x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  RatFunc r(1);
  for (int i = 0; i < n; ++i) r *= x + RatFunc(i);
  return r;
}

PolyQ hermite(HermiteKind kind, int k) {
  if (k < 0) throw std::domain_error("hermite: negative degree");
  // He_{k+1} = x He_k - k He_{k-1};  H_{k+1} = 2x H_k - 2k H_{k-1}.
  const Rational scale = kind == HermiteKind::physicist ? Rational(2) : Rational(1);
  PolyQ prev = PolyQ::constant(1);
  if (k == 0) return prev;
  PolyQ cur = PolyQ::monomial(scale, 1);
  for (int j = 1; j < k; ++j) {
    PolyQ next = PolyQ::monomial(scale, 1) * cur - prev * (scale * Rational(j));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyQ kummer_m_poly(int a, const Rational& c) {
  if (a > 0) throw std::domain_error("kummer_m_poly: a must be a non-positive integer");
  if (nonpositive_int(c)) throw InvalidDenominator("kummer_m_poly: c = " + c.to_string() + " is a non-positive integer");
  std::vector<Rational> coeffs;
  Rational term(1);
  for (int k = 0; k <= -a; ++k) {
    coeffs.push_back(term);
    term *= Rational(a + k) / ((c + Rational(k)) * Rational(k + 1));
  }
  return PolyQ(std::move(coeffs));
}

PolyQ gauss_f_poly(const Rational& a, const Rational& b, const Rational& c) {
  auto na = nonpositive_int(a);
  auto nb = nonpositive_int(b);
  if (!na && !nb) throw UnsupportedCase("gauss_f_poly: neither a nor b is a non-positive integer");
  const int deg = std::min(na.value_or(nb.value_or(0)), nb.value_or(na.value_or(0)));
  std::vector<Rational> coeffs;
  Rational term(1);
  for (int k = 0; k <= deg; ++k) {
    coeffs.push_back(term);
    if (k == deg) break;
    Rational ck = c + Rational(k);
    if (ck.is_zero()) throw InvalidDenominator("gauss_f_poly: (c)_k vanishes for c = " + c.to_string());
    term *= (a + Rational(k)) * (b + Rational(k)) / (ck * Rational(k + 1));
  }
  return PolyQ(std::move(coeffs));
}

PiScalar gamma_half(const Rational& x) {
  Rational twice = x * Rational(2);
  if (x.sign() <= 0 || !twice.is_integer()) {
    throw std::domain_error("gamma_half: argument must be a positive multiple of 1/2, got " + x.to_string());
  }
  if (x.is_integer()) return PiScalar(factorial(static_cast<int>(x.numerator().get_si()) - 1));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = static_cast<int>((twice.numerator().get_si() - 1) / 2);
  return PiScalar(factorial(2 * k) / (pow(Rational(4), k) * factorial(k)), 1);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double error_function(double x) { return std::erf(x); }

PiScalar gaussian_moment_integral(const PolyQ& f, const Rational& alpha) {
  const bool half = alpha == Rational(1, 2);
  if (!half && alpha != Rational(1)) throw std::domain_error("gaussian_moment_integral: alpha must be 1/2 or 1");
  // integral x^(2k) e^(-alpha x^2) = Gamma(k + 1/2) / alpha^(k + 1/2)
  Rational q(0);
  for (int k = 0; 2 * k <= f.degree(); ++k) {
    const Rational& c = f.coeff(2 * k);
    if (c.is_zero()) continue;
    Rational g = gamma_half(Rational(2 * k + 1, 2)).q();
    if (half) g *= pow(Rational(2), k);
    q += c * g;
  }
  return PiScalar(q, 1, half ? 1 : 0);
}

Rational expect_hermite_even(int k, const Rational& sigma2) {
  if (k < 0) throw std::domain_error("expect_hermite_even: negative k");
  if (sigma2.sign() <= 0) throw std::domain_error("expect_hermite_even: sigma2 must be positive");
  return factorial(2 * k) / factorial(k) * pow(Rational(2) * sigma2 - Rational(1), k);
}

double QuadraticSurd::value() const { return coeff.to_double() * std::sqrt(radicand.to_double()); }

QuadraticSurd expect_pk_product(int k, int l, const Rational& sigma2) {
  if (sigma2.sign() <= 0) throw std::domain_error("expect_pk_product: sigma2 must be positive");
  const Rational one(1);
  const Rational radicand = one / (one + sigma2);
  if (k >= 0 && l >= 0 && (k + l) % 2 == 0) {
    const int n = (k + l) / 2;
    // (-1)^n 2^n Gamma(n + 1/2)/sqrt(pi) (1+s2)^-(n+1/2) F(-k, -l, 1/2 - n, (1+s2)/2)
    PolyQ f = gauss_f_poly(Rational(-k), Rational(-l), Rational(1, 2) - Rational(n));
    Rational fv = f((one + sigma2) / Rational(2));
    Rational g = gamma_half(Rational(2 * n + 1, 2)).q();
    Rational sign = n % 2 == 0 ? one : -one;
    return {sign * pow(Rational(2), n) * g * pow(radicand, n) * fv, radicand};
  }
  if (k == -1 && l >= 1 && l % 2 == 1) {
    const int j = (l - 1) / 2;
    // (1 - s2)^j F(-j, 1/2, 3/2, s2^2/(s2^2 - 1)), expanded so that s2 = 1 is regular.
    PolyQ f = gauss_f_poly(Rational(-j), Rational(1, 2), Rational(3, 2));
    const Rational s4 = sigma2 * sigma2;
    Rational sum(0);
    for (int i = 0; i <= j; ++i) {
      Rational term = f.coeff(i) * pow(s4 / (sigma2 + one), i) * pow(one - sigma2, j - i);
      sum += i % 2 == 0 ? term : -term;
    }
    Rational lead = factorial(2 * j + 1) / (pow(Rational(2), j) * factorial(j));
    if (j % 2 == 0) lead = -lead;
    return {lead * sigma2 * sum, radicand};
  }
  throw UnsupportedCase("expect_pk_product: no closed form for (k, l) = (" + std::to_string(k) + ", " +
                        std::to_string(l) + ")");
}

double pk_value(int k, double x) {
  if (k < -1) throw std::domain_error("pk_value: k must be >= -1");
  if (k == -1) return -std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x) * std_normal_cdf(x);
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = x;
  for (int j = 1; j < k; ++j) {
    double next = x * cur - j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double pk_weighted(int k, double x) {
  if (k == -1) return -std::sqrt(2.0 * std::numbers::pi) * std_normal_cdf(x);
  return pk_value(k, x) * std::exp(-0.5 * x * x);
}

double g_closed(int k, double x) {
  if (k < 0) throw std::domain_error("g_closed: k must be >= 0");
  return -pk_weighted(k - 1, x);
}

}  // namespace redd
