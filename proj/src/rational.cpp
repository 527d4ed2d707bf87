#include "redd/exact/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace redd {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(value));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw std::invalid_argument("Rational: bad literal " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    Integer num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("Rational: bad literal " + s);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Rational(num, den);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal " + s);
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(q);
}

double Rational::to_double() const {
  // mpq_get_d truncates; route through a correctly rounded division when both parts fit.
  const auto& num = v_.get_num();
  const auto& den = v_.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
    return num.get_d() / den.get_d();
  }
  return v_.get_d();
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace redd
