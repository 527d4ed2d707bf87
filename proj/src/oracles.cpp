#include "redd/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

#include <boost/math/quadrature/gauss.hpp>

#include "redd/quadrature.hpp"

namespace redd::oracle {

PolyQ hermite_rodrigues(HermiteKind kind, int k) {
  // d/dx (q e^{-c x^2}) = (q' - 2 c x q) e^{-c x^2}
  const Rational two_c = kind == HermiteKind::physicist ? Rational(2) : Rational(1);
  PolyQ q = PolyQ::constant(1);
  for (int i = 0; i < k; ++i) q = derivative(q) - PolyQ::monomial(two_c, 1) * q;
  return k % 2 == 0 ? q : -q;
}

PolyQ wick_det_expectation(int n) {
  PolyQ h = hermite_rodrigues(HermiteKind::physicist, n);
  Rational c = pow(Rational(2), -n);
  return h * (n % 2 == 0 ? c : -c);
}

double folded_normal_mean(double mu, double sd) {
  return sd * std::sqrt(2.0 / std::numbers::pi) * std::exp(-mu * mu / (2.0 * sd * sd)) +
         mu * std::erf(mu / (sd * std::numbers::sqrt2));
}

namespace {

// integral over [lo, hi] with interior kinks at the given points
double integrate_with_breaks(const std::function<double(double)>& f, double lo, double hi,
                             std::vector<double> breaks, double tol) {
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double a = std::clamp(breaks[k], lo, hi);
    double b = std::clamp(breaks[k + 1], lo, hi);
    if (b > a) total += integrate(f, a, b, tol);
  }
  return total;
}

// Inner integrand is smooth between breaks: fixed 60-point Gauss-Legendre per piece.
double two_d(const std::function<double(double, double)>& f, double u) {
  const double L = 10.0;
  auto outer = [&](double x) {
    auto inner = [&](double y) { return f(x, y); };
    std::vector<double> pts{-L, L, std::clamp(x, -L, L), std::clamp(u, -L, L)};
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      for (int h = 0; h < 4; ++h) {
        const double a = pts[k] + (pts[k + 1] - pts[k]) * h / 4.0;
        const double b = pts[k] + (pts[k + 1] - pts[k]) * (h + 1) / 4.0;
        if (b > a) total += boost::math::quadrature::gauss<double, 60>::integrate(inner, a, b);
      }
    }
    return total;
  };
  return integrate_with_breaks(outer, -L, L, {u}, 1e-12);
}

}  // namespace

double abs_det_n2_quadrature(double u) {
  auto w = [](double x, double y) { return std::exp(-0.5 * (x * x + y * y)) * std::abs(x - y); };
  const double z = two_d(w, u);
  const double num = two_d([&](double x, double y) { return w(x, y) * std::abs((x - u) * (y - u)); }, u);
  return num / z;
}

double correction_float(int n, double u) {
  double prod = 1.0;
  for (int i = 1; i <= n; ++i) prod *= std::tgamma(0.5 * i);
  auto minor = [](int m, int i, int j, int lo, double shift) {
    if (m == 1) return 1.0;
    Eigen::MatrixXd a(m - 1, m - 1);
    int row = 0;
    for (int r = lo; r < lo + m; ++r) {
      if (r == i) continue;
      int col = 0;
      for (int s = lo; s < lo + m; ++s) {
        if (s == j) continue;
        a(row, col++) = std::tgamma(r + s + shift);
      }
      ++row;
    }
    return a.determinant();
  };
  double sum = 0.0;
  if (n % 2 == 0) {
    const int m = n / 2;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        sum += minor(m, i, j, 1, -0.5) * (pk_value(2 * i - 1, u) * pk_value(2 * j - 1, u) -
                                          pk_value(2 * j, u) * pk_value(2 * i - 2, u));
      }
    }
    return std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * u * u) / prod * sum;
  }
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // e^{-u^2/2} (P_{2i} P_{2j} - P_{2j+1} P_{2i-1})
      sum += minor(m, i, j, 0, 0.5) * (pk_weighted(2 * i, u) * pk_value(2 * j, u) -
                                       pk_value(2 * j + 1, u) * pk_weighted(2 * i - 1, u));
    }
  }
  return std::numbers::sqrt2 / prod * sum;
}

double gaussian_expectation(double sigma2, const std::function<double(double)>& f) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma2);
  const double sd = std::sqrt(sigma2);
  // substitute u = sd * z so the integrand decays like e^{-z^2/2}
  return integrate_line([&](double z) { return f(sd * z) * std::exp(-0.5 * z * z) * norm * sd; }, 1e-12);
}

double pk_product_quadrature(int k, int l, double sigma2) {
  return gaussian_expectation(sigma2, [&](double u) {
    if (k == -1) return pk_weighted(-1, u) * pk_value(l, u);
    return pk_value(k, u) * pk_value(l, u) * std::exp(-0.5 * u * u);
  });
}

double g_quadrature(int k, double x) {
  return integrate([&](double y) { return pk_value(k, y) * std::exp(-0.5 * y * y); }, -12.0, x, 1e-13);
}

double erf_series(double x, int terms) {
  // M(1/2, 3/2, z) = sum_k (1/2)_k / (3/2)_k z^k / k! = sum_k z^k / ((2k+1) k!)
  const double z = -x * x;
  double sum = 0.0;
  double zk_over_fact = 1.0;
  for (int k = 0; k < terms; ++k) {
    sum += zk_over_fact / (2 * k + 1);
    zk_over_fact *= z / (k + 1);
  }
  return 2.0 * x / std::sqrt(std::numbers::pi) * sum;
}

}  // namespace redd::oracle
