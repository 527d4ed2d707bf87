#pragma once

// Eigen support for exact Rational scalars: dense storage plus an exact
// determinant by Gaussian elimination (Eigen's LU pivots on magnitudes and
// needs sqrt/abs, which an exact field does not want).

#include <Eigen/Core>

#include "redd/exact/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<redd::Rational> : GenericNumTraits<redd::Rational> {
  using Real = redd::Rational;
  using NonInteger = redd::Rational;
  using Literal = redd::Rational;
  using Nested = redd::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace redd {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant; the 0x0 determinant is 1.
inline Rational exact_determinant(MatrixQ a) {
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace redd
