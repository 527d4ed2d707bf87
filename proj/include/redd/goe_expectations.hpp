#pragma once

// Expected determinant J_n(u) = E det(A) and expected absolute determinant
// I_n(u) = E |det(A)| for A ~ GOE(n; u, 1).
//
// I_n - J_n is written as exp(-u^2/2) A(u) + Phi(u) B(u); the Phi channel
// only appears for odd n, where it carries the P_{-1} terms.

#include <optional>

#include "redd/exact/pi_scalar.hpp"
#include "redd/exact/polynomial.hpp"

namespace redd {

struct GammaMinor {
  int variant = 1;  // 1: [Gamma(r+s-1/2)]_{r,s=1..m}; 2: [Gamma(r+s+1/2)]_{r,s=0..m-1}
  int m = 1;
  int i = 1;  // removed row
  int j = 1;  // removed column
};

/// Determinant of the (m-1)x(m-1) minor; the empty determinant is 1.
PiScalar gamma_minor_det(const GammaMinor& spec);

/// Product Gamma(1/2) Gamma(1) ... Gamma(n/2).
PiScalar gamma_half_product(int n);

/// J_n as an exact polynomial in u when known (even n), otherwise empty.
struct DetExpectation {
  int n = 0;
  std::optional<PolyQ> exact;
};

/// J_{2m}(u); the pi powers cancel and the result has rational coefficients.
DetExpectation j_even_closed(int m);

/// scale * poly(u).
struct ScaledPoly {
  PiScalar scale;
  PolyQ poly;
  double operator()(double u) const;
};

struct AbsDetExpr {
  int n = 0;
  std::optional<PolyQ> j_even;  // empty: J_n left to the signed-determinant estimator
  ScaledPoly exp_channel;       // coefficient of exp(-u^2/2)
  ScaledPoly phi_channel;       // coefficient of Phi(u); zero for even n
};

AbsDetExpr abs_det_correction(int n);

/// (I_n - J_n)(u).
double abs_det_correction_eval(const AbsDetExpr& e, double u);

struct AbsDetValue {
  double value = 0.0;       // I_n(u) when j_exact, otherwise the correction alone
  double correction = 0.0;  // I_n(u) - J_n(u)
  bool j_exact = false;     // J_n(u) taken from the closed form
};

AbsDetValue abs_det_eval(int n, double u);

/// Odd n: completes the value with an externally supplied estimate of J_n(u).
AbsDetValue abs_det_eval(int n, double u, double j_estimate);

}  // namespace redd
