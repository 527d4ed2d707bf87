#include "redd/exact/pi_scalar.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace redd {

namespace {

int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

PiScalar::PiScalar(Rational q, int h, int root2) : q_(std::move(q)), h_(h), root2_(root2) {
  if (q_.is_zero()) {
    h_ = 0;
    root2_ = 0;
    return;
  }
  int half = floor_div2(root2_);
  q_ *= pow(Rational(2), half);
  root2_ -= 2 * half;
}

double PiScalar::value() const {
  double v = q_.to_double();
  if (root2_ == 1) v *= std::numbers::sqrt2;
  if (h_ != 0) v *= std::pow(std::numbers::pi, 0.5 * h_);
  return v;
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  return PiScalar(a.q() * b.q(), a.h() + b.h(), a.root2() + b.root2());
}

PiScalar operator/(const PiScalar& a, const PiScalar& b) {
  if (b.is_zero()) throw std::domain_error("PiScalar: division by zero");
  return PiScalar(a.q() / b.q(), a.h() - b.h(), a.root2() - b.root2());
}

PiScalar pow(const PiScalar& base, int exponent) {
  if (exponent < 0) return PiScalar(1) / pow(base, -exponent);
  return PiScalar(pow(base.q(), exponent), base.h() * exponent, base.root2() * exponent);
}

std::ostream& operator<<(std::ostream& os, const PiScalar& x) {
  os << x.q();
  if (x.root2() != 0) os << "*sqrt(2)";
  if (x.h() != 0) os << "*pi^(" << x.h() << "/2)";
  return os;
}

}  // namespace redd
