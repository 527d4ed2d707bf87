#pragma once

// Arbitrary-precision rationals backed by GMP.
//
// Always in lowest terms with a positive denominator; zero is 0/1.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace redd {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const Integer& value) : v_(value) {}
  explicit Rational(mpq_class value);

  /// Exact dyadic value of a finite double.
  static Rational from_double(double value);

  /// Parses "a", "-a/b" or a decimal such as "2.5".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const;
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, int exponent);
Rational factorial(int n);

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace redd
