#pragma once

// Expected number of real critical rank-one approximations E(n, p) of a
// Gaussian symmetric tensor, as an exact element of Q(p)[sqrt(p-1), sqrt(3p-2)].

#include <optional>
#include <string>
#include <vector>

#include "redd/exact/radical.hpp"

namespace redd {

/// D(n, p) = sum_{i<n} (p-1)^i, the number of complex critical points.
Integer complex_edd(int n, int p);

struct ReddExpr {
  int n = 0;
  RadicalExpr expr;
};

/// Closed form of E(n, p); n >= 2. Cached and safe to call concurrently.
ReddExpr expected_redd_symbolic(int n);

/// E(n, p0) for rational p0 >= 2.
double expected_redd_eval(int n, const Rational& p0);

struct StructureReport {
  int n = 0;
  bool ok = false;
  bool pi_collapsed = false;  // pi half-exponent is 0
  bool in_field = false;      // odd: E - 1 in Q(p) s t; even: E in Q(p) t
  bool degrees_ok = false;
  /// odd n: {deg f}; even n: {deg g, deg g_0, ..., deg g_{m-1}}; -1 where no polynomial exists
  std::vector<int> degrees;
  std::string detail;
};

/// Checks the polynomial shape of E(n, p):
///   odd n = 2m+1:  E = 1 + s t (p-1)^(m-1) f(y),                                   deg f = 2m-1
///   even n = 2m:   E = p (p-1)^(m-1)/t sum_j ((p-2)/(p-1))^j g_j(z) + (p-1)^(m-1) t g(y),
///                  deg g = 2m-2, deg g_j = j
/// with y = 4(p-1)/(3p-2) and z = p^2/((3p-2)(p-2)).
StructureReport structural_decomposition(int n);

/// Polynomial h with h(z(p)) = target(p) and deg h <= max_deg, if one exists.
std::optional<PolyQ> fit_polynomial_in(const RatFunc& target, const RatFunc& z, int max_deg);

enum class TableFormat { text, latex, json };

/// Renders E(n, p) for n_min <= n <= n_max, 2 <= n_min <= n_max <= 12.
std::string emit_table(int n_min, int n_max, TableFormat format);

}  // namespace redd
