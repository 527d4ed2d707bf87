#pragma once

#include "redd/exact/rational.hpp"

#include <iosfwd>

namespace redd {

/// Exact scalar q * sqrt(2)^root2 * sqrt(pi)^h.
///
/// This is the value ring of products of half-integer Gamma values together
/// with the sqrt(2) factors that Gaussian normalisations introduce. Canonical
/// form keeps root2 in {0, 1} (even powers of sqrt(2) are folded into q) and
/// maps zero to (0, 0, 0).
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(Rational q, int h = 0, int root2 = 0);  // NOLINT(google-explicit-constructor)

  const Rational& q() const { return q_; }
  int h() const { return h_; }
  int root2() const { return root2_; }

  bool is_zero() const { return q_.is_zero(); }
  /// True when the value is an ordinary rational (no sqrt(2), no pi).
  bool is_rational() const { return h_ == 0 && root2_ == 0; }

  double value() const;

  PiScalar operator-() const { return PiScalar(-q_, h_, root2_); }
  friend bool operator==(const PiScalar&, const PiScalar&) = default;

 private:
  Rational q_;
  int h_ = 0;
  int root2_ = 0;
};

PiScalar operator*(const PiScalar& a, const PiScalar& b);
PiScalar operator/(const PiScalar& a, const PiScalar& b);
PiScalar pow(const PiScalar& base, int exponent);

inline PiScalar sqrt_pi() { return PiScalar(1, 1); }
inline PiScalar sqrt_two() { return PiScalar(1, 0, 1); }

std::ostream& operator<<(std::ostream& os, const PiScalar& x);

}  // namespace redd
