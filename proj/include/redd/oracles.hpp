#pragma once

// Independent reference computations. Nothing here is used by the formula
// pipeline; these exist so tests and `verify` can compare against a second
// derivation.

#include <functional>

#include "redd/exact/polynomial.hpp"
#include "redd/special_functions.hpp"

namespace redd::oracle {

/// Hermite polynomial from the Rodrigues formula (repeated differentiation).
PolyQ hermite_rodrigues(HermiteKind kind, int k);

/// E det(GOE(n; u, 1)) by Wick's theorem: (-1)^n 2^-n H_n(u).
PolyQ wick_det_expectation(int n);

/// E|X| for X ~ N(mu, sd^2).
double folded_normal_mean(double mu, double sd);

/// I_2(u) by 2-d quadrature over the GOE(2) eigenvalue density
/// exp(-(x^2 + y^2)/2) |x - y|.
double abs_det_n2_quadrature(double u);

/// I_n(u) - J_n(u) assembled in double precision straight from the
/// Gamma-minor / P_k sum (no exact arithmetic).
double correction_float(int n, double u);

/// E_{u ~ N(0, s2)} f(u) by quadrature.
double gaussian_expectation(double sigma2, const std::function<double(double)>& f);

/// E P_k(u) P_l(u) exp(-u^2/2) for u ~ N(0, s2) by quadrature.
double pk_product_quadrature(int k, int l, double sigma2);

/// G_k(x) = integral_{-inf}^x P_k(y) exp(-y^2/2) dy by quadrature.
double g_quadrature(int k, double x);

/// erf(x) from the Kummer series (2x/sqrt(pi)) M(1/2, 3/2, -x^2), truncated after `terms` terms.
double erf_series(double x, int terms);

}  // namespace redd::oracle
