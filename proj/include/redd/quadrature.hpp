#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace redd {

/// Adaptive 15-point Gauss-Kronrod on [a, b].
template <typename F>
double integrate(F f, double a, double b, double tol = 1e-10) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 25, tol, &err);
}

/// Integrand with Gaussian decay over R; truncated to |x| <= 12 (tail below e^-72).
template <typename F>
double integrate_line(F f, double tol = 1e-10) {
  return integrate(f, -12.0, 12.0, tol);
}

}  // namespace redd
