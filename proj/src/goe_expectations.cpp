#include "redd/goe_expectations.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "redd/exact/rational_eigen.hpp"
#include "redd/special_functions.hpp"

namespace redd {

namespace {

PolyQ he(int k) { return hermite(HermiteKind::probabilist, k); }

// Rational part of the minor; every entry is q sqrt(pi), so the pi factor is pi^((m-1)/2).
Rational gamma_minor_rational(const GammaMinor& g) {
  const int lo = g.variant == 1 ? 1 : 0;
  const Rational shift = g.variant == 1 ? Rational(-1, 2) : Rational(1, 2);
  MatrixQ a(g.m - 1, g.m - 1);
  Eigen::Index row = 0;
  for (int r = lo; r < lo + g.m; ++r) {
    if (r == g.i) continue;
    Eigen::Index col = 0;
    for (int s = lo; s < lo + g.m; ++s) {
      if (s == g.j) continue;
      a(row, col++) = gamma_half(Rational(r + s) + shift).q();
    }
    ++row;
  }
  return exact_determinant(a);
}

void check_minor(const GammaMinor& g) {
  if (g.variant != 1 && g.variant != 2) throw std::out_of_range("GammaMinor: variant must be 1 or 2");
  if (g.m < 1) throw std::out_of_range("GammaMinor: m must be >= 1");
  const int lo = g.variant == 1 ? 1 : 0;
  if (g.i < lo || g.i >= lo + g.m || g.j < lo || g.j >= lo + g.m) {
    throw std::out_of_range("GammaMinor: index (" + std::to_string(g.i) + ", " + std::to_string(g.j) +
                            ") out of range for m = " + std::to_string(g.m));
  }
}

AbsDetExpr build_correction(int n) {
  AbsDetExpr e;
  e.n = n;
  if (n % 2 == 0) {
    const int m = n / 2;
    e.j_even = j_even_closed(m).exact;
    PolyQ sum;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        Rational d = gamma_minor_rational({1, m, i, j});
        if (d.is_zero()) continue;
        sum += (he(2 * i - 1) * he(2 * j - 1) - he(2 * j) * he(2 * i - 2)) * d;
      }
    }
    // sqrt(2 pi) / prod Gamma(k/2) * pi^((m-1)/2)
    e.exp_channel = {sqrt_two() * sqrt_pi() * PiScalar(1, m - 1) / gamma_half_product(n), sum};
    e.phi_channel = {PiScalar(0), PolyQ{}};
    return e;
  }
  const int m = (n + 1) / 2;
  PolyQ exp_sum;
  PolyQ phi_sum;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Rational d = gamma_minor_rational({2, m, i, j});
      if (d.is_zero()) continue;
      exp_sum += he(2 * i) * he(2 * j) * d;
      if (i >= 1) {
        exp_sum -= he(2 * j + 1) * he(2 * i - 1) * d;
      } else {
        // -P_{2j+1} P_{-1} e^{-u^2/2} = sqrt(2 pi) P_{2j+1} Phi(u)
        phi_sum += he(2 * j + 1) * d;
      }
    }
  }
  const PiScalar base = sqrt_two() * PiScalar(1, m - 1) / gamma_half_product(n);
  e.exp_channel = {base, exp_sum};
  e.phi_channel = {base * sqrt_two() * sqrt_pi(), phi_sum};
  return e;
}

}  // namespace

PiScalar gamma_minor_det(const GammaMinor& spec) {
  check_minor(spec);
  return PiScalar(gamma_minor_rational(spec), spec.m - 1);
}

PiScalar gamma_half_product(int n) {
  PiScalar r(1);
  for (int i = 1; i <= n; ++i) r = r * gamma_half(Rational(i, 2));
  return r;
}

DetExpectation j_even_closed(int m) {
  if (m < 1) throw std::domain_error("j_even_closed: m must be >= 1");
  Rational fac(1);
  for (int i = 1; i <= m - 1; ++i) fac *= factorial(2 * i);
  PiScalar c = PiScalar(fac / pow(Rational(2), m * (m + 1)), m) / gamma_half_product(2 * m);
  if (!c.is_rational()) throw std::logic_error("j_even_closed: pi powers failed to cancel");
  return {2 * m, hermite(HermiteKind::physicist, 2 * m) * c.q()};
}

double ScaledPoly::operator()(double u) const {
  if (poly.is_zero()) return 0.0;
  return scale.value() * evaluate(poly, u);
}

AbsDetExpr abs_det_correction(int n) {
  if (n < 1) throw std::domain_error("abs_det_correction: n must be >= 1");
  static std::mutex mu;
  static std::map<int, AbsDetExpr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_correction(n)).first;
  return it->second;
}

double abs_det_correction_eval(const AbsDetExpr& e, double u) {
  double v = e.exp_channel(u) * std::exp(-0.5 * u * u);
  if (!e.phi_channel.poly.is_zero()) v += e.phi_channel(u) * std_normal_cdf(u);
  return v;
}

AbsDetValue abs_det_eval(int n, double u) {
  AbsDetExpr e = abs_det_correction(n);
  AbsDetValue r;
  r.correction = abs_det_correction_eval(e, u);
  r.value = r.correction;
  if (e.j_even) {
    r.value += evaluate(*e.j_even, u);
    r.j_exact = true;
  }
  return r;
}

AbsDetValue abs_det_eval(int n, double u, double j_estimate) {
  AbsDetValue r = abs_det_eval(n, u);
  if (!r.j_exact) r.value = r.correction + j_estimate;
  return r;
}

}  // namespace redd
