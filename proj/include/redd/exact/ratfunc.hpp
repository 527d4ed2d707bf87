#pragma once

// Rational functions in one variable p over Q.
//
// Canonical form: gcd(num, den) = 1 and den monic, so equal functions have
// equal representations and removable singularities disappear on construction.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "redd/exact/polynomial.hpp"
#include "redd/exact/rational.hpp"

namespace redd {

/// Raised when a rational function is evaluated at a zero of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RatFunc {
 public:
  RatFunc() : den_(PolyQ::constant(1)) {}
  RatFunc(const Rational& c) : num_(PolyQ::constant(c)), den_(PolyQ::constant(1)) {}  // NOLINT
  template <std::integral I>
  RatFunc(I c) : RatFunc(Rational(c)) {}  // NOLINT
  RatFunc(PolyQ num) : num_(std::move(num)), den_(PolyQ::constant(1)) { canonicalize(); }  // NOLINT
  RatFunc(PolyQ num, PolyQ den);

  /// The indeterminate p.
  static RatFunc p() { return RatFunc(PolyQ::x()); }
  /// a*p + b.
  static RatFunc linear(const Rational& a, const Rational& b) { return RatFunc(PolyQ{b, a}); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational evaluate(const Rational& p0) const;
  double evaluate(double p0) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void canonicalize();

  PolyQ num_;
  PolyQ den_;
};

RatFunc pow(const RatFunc& base, int exponent);

/// f(g(p)).
RatFunc compose(const PolyQ& f, const RatFunc& g);
RatFunc compose(const RatFunc& f, const RatFunc& g);

/// Textual form of a polynomial in the named variable, e.g. "3*p^2 - p + 1".
std::string poly_to_string(const PolyQ& f, const std::string& var = "p");

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace redd
