#pragma once

// The quadratic extension Q(p)[s, t] with s^2 = p - 1 and t^2 = 3p - 2.
//
// Elements are c1 + cs*s + ct*t + cst*s*t with rational-function coordinates,
// times an overall sqrt(pi)^pi_half factor.

#include <iosfwd>
#include <map>
#include <string>

#include "redd/exact/pi_scalar.hpp"
#include "redd/exact/ratfunc.hpp"

namespace redd {

struct RadicalExpr {
  RatFunc c1;
  RatFunc cs;
  RatFunc ct;
  RatFunc cst;
  int pi_half = 0;

  RadicalExpr() = default;
  RadicalExpr(RatFunc one) : c1(std::move(one)) {}  // NOLINT(google-explicit-constructor)
  RadicalExpr(RatFunc one, RatFunc s, RatFunc t, RatFunc st, int pi = 0)
      : c1(std::move(one)), cs(std::move(s)), ct(std::move(t)), cst(std::move(st)), pi_half(pi) {}

  static RadicalExpr s() { return {0, 1, 0, 0}; }
  static RadicalExpr t() { return {0, 0, 1, 0}; }
  static RadicalExpr st() { return {0, 0, 0, 1}; }

  bool is_zero() const { return c1.is_zero() && cs.is_zero() && ct.is_zero() && cst.is_zero(); }

  RadicalExpr operator-() const { return {-c1, -cs, -ct, -cst, pi_half}; }
  RadicalExpr& operator+=(const RadicalExpr& o);
  RadicalExpr& operator-=(const RadicalExpr& o) { return *this += -o; }

  friend RadicalExpr operator+(RadicalExpr a, const RadicalExpr& b) { return a += b; }
  friend RadicalExpr operator-(RadicalExpr a, const RadicalExpr& b) { return a -= b; }
  friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);
};

RadicalExpr radical_mul(const RadicalExpr& a, const RadicalExpr& b);
inline RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) { return radical_mul(a, b); }
RadicalExpr operator*(const RadicalExpr& a, const RatFunc& f);
inline RadicalExpr operator*(const RatFunc& f, const RadicalExpr& a) { return a * f; }

/// Multiplies by q * sqrt(pi)^h; a sqrt(2) factor is outside the basis and throws.
RadicalExpr operator*(const RadicalExpr& a, const PiScalar& c);

/// Numeric value at p0 >= 1 with positive square roots, including the pi factor.
double radical_eval(const RadicalExpr& e, const Rational& p0);

std::ostream& operator<<(std::ostream& os, const RadicalExpr& e);

/// A sum of radical expressions with differing pi exponents, keyed by exponent.
class PiGradedRadical {
 public:
  void add(const RadicalExpr& e);
  PiGradedRadical& operator+=(const PiGradedRadical& o);
  PiGradedRadical operator*(const PiScalar& c) const;
  PiGradedRadical operator*(const RadicalExpr& e) const;

  const std::map<int, RadicalExpr>& parts() const { return parts_; }

  /// The single surviving component; throws std::logic_error if any other
  /// pi exponent has a nonzero coefficient or if that exponent is not `expect`.
  RadicalExpr collapse(int expect = 0) const;

 private:
  std::map<int, RadicalExpr> parts_;
};

}  // namespace redd
