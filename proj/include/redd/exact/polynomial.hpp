#pragma once

// Dense univariate polynomials over a field scalar.
//
// Coefficients are stored in ascending degree with no trailing zeros, so the
// zero polynomial is the empty vector. Scalar must provide field arithmetic,
// equality and construction from int; Rational and double both qualify.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "redd/exact/rational.hpp"

namespace redd {

template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& value) { return Polynomial(std::vector<Scalar>{value}); }
  static Polynomial monomial(const Scalar& coeff, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  Scalar coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  template <typename U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using PolyQ = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, int exponent) {
  if (exponent < 0) throw std::domain_error("polynomial power with negative exponent");
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  const Scalar lead = b.leading();
  if (a.degree() < db) return {Polynomial<Scalar>{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db) + 1, Scalar(0));
  for (int k = a.degree(); k >= db; --k) {
    Scalar factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == Scalar(0)) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() <= 0) return {};
  std::vector<Scalar> d(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) d[static_cast<std::size_t>(k - 1)] = p.coeff(k) * Scalar(k);
  return Polynomial<Scalar>(std::move(d));
}

/// f(g(x)).
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& f, const Polynomial<Scalar>& g) {
  Polynomial<Scalar> acc;
  for (int k = f.degree(); k >= 0; --k) acc = acc * g + Polynomial<Scalar>::constant(f.coeff(k));
  return acc;
}

/// Coefficient-wise conversion, e.g. PolyQ -> Polynomial<double>.
template <typename To, typename From, typename Conv>
Polynomial<To> cast(const Polynomial<From>& p, Conv conv) {
  std::vector<To> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.push_back(conv(v));
  return Polynomial<To>(std::move(c));
}

/// Evaluates any polynomial at a double abscissa.
template <typename Scalar>
double evaluate(const Polynomial<Scalar>& p, double x) {
  double acc = 0.0;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_double(p.coeff(k));
  return acc;
}

}  // namespace redd
