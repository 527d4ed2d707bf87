#include "redd/exact/radical.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace redd {

namespace {

const RatFunc& pm1() {
  static const RatFunc f = RatFunc::linear(1, -1);
  return f;
}
const RatFunc& p3m2() {
  static const RatFunc f = RatFunc::linear(3, -2);
  return f;
}

}  // namespace

RadicalExpr& RadicalExpr::operator+=(const RadicalExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (pi_half != o.pi_half) throw std::logic_error("RadicalExpr: adding terms with different pi exponents");
  c1 += o.c1;
  cs += o.cs;
  ct += o.ct;
  cst += o.cst;
  if (is_zero()) pi_half = 0;
  return *this;
}

bool operator==(const RadicalExpr& a, const RadicalExpr& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.pi_half == b.pi_half && a.c1 == b.c1 && a.cs == b.cs && a.ct == b.ct && a.cst == b.cst;
}

RadicalExpr radical_mul(const RadicalExpr& a, const RadicalExpr& b) {
  const RatFunc& P1 = pm1();
  const RatFunc& P3 = p3m2();
  RadicalExpr r;
  r.c1 = a.c1 * b.c1 + a.cs * b.cs * P1 + a.ct * b.ct * P3 + a.cst * b.cst * P1 * P3;
  r.cs = a.c1 * b.cs + a.cs * b.c1 + (a.ct * b.cst + a.cst * b.ct) * P3;
  r.ct = a.c1 * b.ct + a.ct * b.c1 + (a.cs * b.cst + a.cst * b.cs) * P1;
  r.cst = a.c1 * b.cst + a.cst * b.c1 + a.cs * b.ct + a.ct * b.cs;
  r.pi_half = r.is_zero() ? 0 : a.pi_half + b.pi_half;
  return r;
}

RadicalExpr operator*(const RadicalExpr& a, const RatFunc& f) {
  RadicalExpr r{a.c1 * f, a.cs * f, a.ct * f, a.cst * f, a.pi_half};
  if (r.is_zero()) r.pi_half = 0;
  return r;
}

RadicalExpr operator*(const RadicalExpr& a, const PiScalar& c) {
  if (c.root2() != 0) throw std::logic_error("RadicalExpr: sqrt(2) is not in the coefficient field");
  RadicalExpr r = a * RatFunc(c.q());
  if (!r.is_zero()) r.pi_half += c.h();
  return r;
}

double radical_eval(const RadicalExpr& e, const Rational& p0) {
  if (p0 < Rational(1)) throw std::domain_error("radical_eval: need p >= 1, got " + p0.to_string());
  const double s = std::sqrt(pm1().evaluate(p0).to_double());
  const double t = std::sqrt(p3m2().evaluate(p0).to_double());
  double v = e.c1.evaluate(p0).to_double();
  if (!e.cs.is_zero()) v += e.cs.evaluate(p0).to_double() * s;
  if (!e.ct.is_zero()) v += e.ct.evaluate(p0).to_double() * t;
  if (!e.cst.is_zero()) v += e.cst.evaluate(p0).to_double() * s * t;
  if (e.pi_half != 0) v *= std::pow(std::numbers::pi, 0.5 * e.pi_half);
  return v;
}

std::ostream& operator<<(std::ostream& os, const RadicalExpr& e) {
  os << "[" << e.c1 << "] + [" << e.cs << "]*s + [" << e.ct << "]*t + [" << e.cst << "]*s*t";
  if (e.pi_half != 0) os << " * pi^(" << e.pi_half << "/2)";
  return os;
}

void PiGradedRadical::add(const RadicalExpr& e) {
  if (e.is_zero()) return;
  auto it = parts_.find(e.pi_half);
  if (it == parts_.end()) {
    parts_.emplace(e.pi_half, e);
    return;
  }
  it->second += e;
  if (it->second.is_zero()) parts_.erase(it);
}

PiGradedRadical& PiGradedRadical::operator+=(const PiGradedRadical& o) {
  for (const auto& [h, e] : o.parts_) add(e);
  return *this;
}

PiGradedRadical PiGradedRadical::operator*(const PiScalar& c) const {
  PiGradedRadical r;
  for (const auto& [h, e] : parts_) r.add(e * c);
  return r;
}

PiGradedRadical PiGradedRadical::operator*(const RadicalExpr& x) const {
  PiGradedRadical r;
  for (const auto& [h, e] : parts_) r.add(e * x);
  return r;
}

RadicalExpr PiGradedRadical::collapse(int expect) const {
  RadicalExpr out;
  for (const auto& [h, e] : parts_) {
    if (h != expect) {
      throw std::logic_error("pi exponents failed to cancel: residual component with pi^(" + std::to_string(h) +
                             "/2)");
    }
    out = e;
  }
  return out;
}

}  // namespace redd
