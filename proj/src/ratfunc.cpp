#include "redd/exact/ratfunc.hpp"

#include <ostream>
#include <sstream>

namespace redd {

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = PolyQ::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    PolyQ g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::evaluate(const Rational& p0) const {
  Rational d = den_(p0);
  if (d.is_zero()) throw PoleError("RatFunc: pole at p = " + p0.to_string());
  return num_(p0) / d;
}

double RatFunc::evaluate(double p0) const {
  double d = redd::evaluate(den_, p0);
  if (d == 0.0) throw PoleError("RatFunc: pole at p = " + std::to_string(p0));
  return redd::evaluate(num_, p0) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc pow(const RatFunc& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("RatFunc: negative power of zero");
    return RatFunc(pow(base.den(), -exponent), pow(base.num(), -exponent));
  }
  return RatFunc(pow(base.num(), exponent), pow(base.den(), exponent));
}

RatFunc compose(const PolyQ& f, const RatFunc& g) {
  // Homogenise: f(a/b) = sum f_k a^k b^(d-k) / b^d.
  const int d = f.degree();
  if (d <= 0) return RatFunc(f);
  PolyQ acc;
  PolyQ apow = PolyQ::constant(1);
  for (int k = 0; k <= d; ++k) {
    if (!f.coeff(k).is_zero()) acc += apow * pow(g.den(), d - k) * f.coeff(k);
    apow = apow * g.num();
  }
  return RatFunc(acc, pow(g.den(), d));
}

RatFunc compose(const RatFunc& f, const RatFunc& g) { return compose(f.num(), g) / compose(f.den(), g); }

std::string poly_to_string(const PolyQ& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0 || a != Rational(1)) {
      os << a;
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return poly_to_string(num_);
  return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace redd
