#include "redd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "redd/edd_formula.hpp"
#include "redd/goe_expectations.hpp"
#include "redd/monte_carlo.hpp"
#include "redd/oracles.hpp"
#include "redd/render.hpp"
#include "redd/special_functions.hpp"

namespace redd {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

CheckResult make(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

// Tracks the worst deviation over a grid.
struct Worst {
  double err = 0.0;
  std::string where;
  void see(double e, const std::string& at) {
    if (!(e <= err)) {  // NaN sticks
      err = e;
      where = at;
    }
  }
  std::string str() const { return "max err " + num(err) + (where.empty() ? "" : " at " + where); }
};

double rel_err(double got, double want, double floor = 1.0) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

PolyQ neg_x(const PolyQ& f) { return compose(f, PolyQ{Rational(0), Rational(-1)}); }

}  // namespace

// ---------------------------------------------------------------- special functions

Checks check_special_functions() {
  Checks out;
  const auto He = [](int k) { return hermite(HermiteKind::probabilist, k); };
  const auto H = [](int k) { return hermite(HermiteKind::physicist, k); };

  out.push_back(make("pochhammer examples",
                     pochhammer(Rational(7), 0) == 1 && pochhammer(Rational(3), 2) == 12 &&
                         pochhammer(Rational(-2), 3) == 0 && pochhammer(Rational(1, 2), 3) == Rational(15, 8)));

  out.push_back(make("gamma at half integers", gamma_half(Rational(1, 2)) == sqrt_pi() &&
                                                   gamma_half(Rational(3, 2)) == PiScalar(Rational(1, 2), 1) &&
                                                   gamma_half(Rational(5, 2)) == PiScalar(Rational(3, 4), 1) &&
                                                   gamma_half(Rational(4)) == PiScalar(6)));

  out.push_back(make("hermite examples", He(0) == PolyQ{1} && He(2) == PolyQ{-1, 0, 1} && H(2) == PolyQ{-2, 0, 4}));

  {
    bool ok = kummer_m_poly(0, Rational(5, 2)) == PolyQ{1} &&
              kummer_m_poly(-1, Rational(3, 2)) == PolyQ{Rational(1), Rational(-2, 3)} &&
              gauss_f_poly(-1, -1, Rational(1, 2)) == PolyQ{1, 2} &&
              gauss_f_poly(-2, -3, Rational(1, 2)) == PolyQ{1, 12, 8};
    bool threw_den = false, threw_case = false;
    try {
      gauss_f_poly(-2, -2, Rational(-1));
    } catch (const InvalidDenominator&) {
      threw_den = true;
    }
    try {
      gauss_f_poly(Rational(1, 2), 1, Rational(3, 2));
    } catch (const UnsupportedCase&) {
      threw_case = true;
    }
    out.push_back(make("hypergeometric polynomial examples", ok && threw_den && threw_case));
  }

  {
    int bad = -1;
    for (int k = 0; k <= 10 && bad < 0; ++k) {
      if (He(k) != oracle::hermite_rodrigues(HermiteKind::probabilist, k) ||
          H(k) != oracle::hermite_rodrigues(HermiteKind::physicist, k))
        bad = k;
    }
    out.push_back(make("hermite recurrence matches Rodrigues, k <= 10", bad < 0,
                       bad < 0 ? "" : "first mismatch k=" + std::to_string(bad)));
  }

  {
    // coefficient j of H_k(x/sqrt 2) is h_j 2^(-j/2); k + j is even whenever h_j != 0
    int bad = -1;
    for (int k = 0; k <= 10 && bad < 0; ++k) {
      const PolyQ he = He(k), h = H(k);
      for (int j = 0; j <= k; ++j) {
        if (h.coeff(j).is_zero() && he.coeff(j).is_zero()) continue;
        if ((k + j) % 2 != 0 || he.coeff(j) != h.coeff(j) / pow(Rational(2), (k + j) / 2)) bad = k;
      }
    }
    out.push_back(make("He_k(x) = 2^(-k/2) H_k(x/sqrt 2), k <= 10", bad < 0,
                       bad < 0 ? "" : "mismatch k=" + std::to_string(bad)));
  }

  {
    int bad = -1;
    for (int k = 0; k <= 10 && bad < 0; ++k) {
      const Rational sgn = k % 2 == 0 ? 1 : -1;
      if (neg_x(He(k)) != He(k) * sgn || neg_x(H(k)) != H(k) * sgn) bad = k;
    }
    out.push_back(make("Hermite parity, k <= 10", bad < 0, bad < 0 ? "" : "mismatch k=" + std::to_string(bad)));
  }

  {
    const PolyQ x2 = PolyQ{0, 0, 1};
    int bad = -1;
    for (int k = 0; k <= 10 && bad < 0; ++k) {
      const Rational sgn = k % 2 == 0 ? 1 : -1;
      PolyQ odd = compose(kummer_m_poly(-k, Rational(3, 2)), x2) * PolyQ{0, 2} *
                  (sgn * factorial(2 * k + 1) / factorial(k));
      PolyQ even = compose(kummer_m_poly(-k, Rational(1, 2)), x2) * (sgn * factorial(2 * k) / factorial(k));
      if (odd != H(2 * k + 1) || even != H(2 * k)) bad = k;
    }
    out.push_back(make("Hermite as Kummer M, k <= 10", bad < 0, bad < 0 ? "" : "mismatch k=" + std::to_string(bad)));
  }

  {
    int checked = 0;
    std::string bad;
    const std::vector<Rational> cs{Rational(1, 2), Rational(3, 2), Rational(5, 2), Rational(7, 2)};
    for (int a = 0; a >= -6; --a) {
      for (int b = 0; b >= -6; --b) {
        for (const auto& c : cs) {
          PolyQ lhs = gauss_f_poly(a, b + 1, c) - gauss_f_poly(a + 1, b, c);
          // a = b = 0: both sides vanish and F(1, 1, c + 1, x) does not truncate
          PolyQ rhs = a == b ? PolyQ{}
                             : PolyQ{Rational(0), Rational(a - b) / c} * gauss_f_poly(a + 1, b + 1, c + Rational(1));
          ++checked;
          if (lhs != rhs && bad.empty())
            bad = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + c.to_string();
        }
      }
    }
    out.push_back(make("contiguous relation of F", bad.empty(),
                       bad.empty() ? std::to_string(checked) + " triples" : "fails at " + bad));
  }

  {
    bool ok = gaussian_moment_integral(PolyQ{1}, 1) == sqrt_pi() &&
              gaussian_moment_integral(PolyQ{0, 0, 1}, 1) == PiScalar(Rational(1, 2), 1) &&
              gaussian_moment_integral(PolyQ{1}, Rational(1, 2)) == PiScalar(1, 1, 1) &&
              gaussian_moment_integral(PolyQ{0, 1}, 1).is_zero();
    out.push_back(make("Gaussian moment integrals", ok));
  }

  {
    std::string bad;
    for (int m = 0; m <= 9; ++m) {
      for (int n = 0; n <= 9; ++n) {
        PiScalar got = gaussian_moment_integral(He(m) * He(n), 1);
        PiScalar want;
        if ((m + n) % 2 == 0) {
          want = gamma_half(Rational(m + n + 1, 2)) * PiScalar((m / 2 + n / 2) % 2 == 0 ? 1 : -1);
        }
        if (!(got == want) && bad.empty()) bad = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
    out.push_back(make("Hermite orthogonality against exp(-x^2), m, n <= 9", bad.empty(), bad));
  }

  {
    Worst w;
    for (int k = 0; k <= 8; ++k) {
      for (int x = -2; x <= 2; ++x) {
        w.see(std::abs(g_closed(k, x) - oracle::g_quadrature(k, x)), "k=" + std::to_string(k) + " x=" + std::to_string(x));
      }
    }
    out.push_back(make("G_k closed form vs quadrature", w.err <= 1e-9, w.str()));
  }

  {
    // <G_k, P_l> = -int He_{k-1} He_l exp(-x^2)
    auto pair = [&](int k, int l) { return -gaussian_moment_integral(He(k - 1) * He(l), 1); };
    std::string bad;
    for (int k = 1; k <= 8; ++k) {
      for (int l = 1; l <= 8; ++l) {
        bool ok = pair(k, l) == -pair(l, k);
        if ((k + l) % 2 == 0) ok = ok && pair(k, l).is_zero();
        if (!ok && bad.empty()) bad = "k=" + std::to_string(k) + " l=" + std::to_string(l);
      }
    }
    out.push_back(make("<G_k, P_l> antisymmetric, zero for k + l even", bad.empty(), bad));

    std::string bad2;
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        PiScalar want = gamma_half(Rational(2 * (i + j) - 1, 2)) * PiScalar((i + j) % 2 == 0 ? 1 : -1);
        if (!(pair(2 * i - 1, 2 * j) == want) && bad2.empty())
          bad2 = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
    }
    out.push_back(make("<G_{2i-1}, P_{2j}> = (-1)^(i+j) Gamma(i+j-1/2), i, j <= 4", bad2.empty(), bad2));
  }

  {
    const std::vector<Rational> s2{Rational(1, 2), Rational(1), Rational(3, 2)};
    Worst w;
    bool examples = expect_hermite_even(0, 3) == 1 && expect_hermite_even(3, Rational(1, 2)) == 0 &&
                    expect_hermite_even(1, 1) == 2;
    for (const auto& s : s2) {
      for (int k = 0; k <= 5; ++k) {
        const PolyQ h = H(2 * k);
        double quad = oracle::gaussian_expectation(s.to_double(), [&](double u) { return evaluate(h, u); });
        double l1 = oracle::gaussian_expectation(s.to_double(), [&](double u) { return std::abs(evaluate(h, u)); });
        double want = expect_hermite_even(k, s).to_double();
        w.see(std::abs(quad - want) / std::max(std::abs(want), l1), "k=" + std::to_string(k) + " s2=" + s.to_string());
      }
    }
    out.push_back(make("E H_2k(u) vs quadrature", examples && w.err <= 1e-8, w.str()));
  }

  {
    const std::vector<Rational> s2{Rational(1, 2), Rational(1), Rational(3, 2)};
    Worst w;
    int cases = 0;
    for (const auto& s : s2) {
      for (int k = -1; k <= 7; ++k) {
        for (int l = 0; l <= 7; ++l) {
          if (k == -1 ? l % 2 == 0 : (k + l) % 2 != 0) continue;
          double got = expect_pk_product(k, l, s).value();
          double want = oracle::pk_product_quadrature(k, l, s.to_double());
          ++cases;
          w.see(rel_err(got, want, 1e-12),
                "k=" + std::to_string(k) + " l=" + std::to_string(l) + " s2=" + s.to_string());
        }
      }
    }
    bool example = std::abs(expect_pk_product(-1, 1, 1).value() + 1.0 / std::numbers::sqrt2) <= 1e-15 &&
                   std::abs(expect_pk_product(0, 0, 1).value() - 1.0 / std::numbers::sqrt2) <= 1e-15;
    out.push_back(make("E P_k P_l exp(-u^2/2) vs quadrature", example && w.err <= 1e-8,
                       std::to_string(cases) + " cases, " + w.str()));
  }

  {
    Worst rel, ser;
    bool anchors = std_normal_cdf(0.0) == 0.5 && error_function(0.0) == 0.0;
    for (int i = -24; i <= 24; ++i) {
      const double x = 0.25 * i;
      rel.see(std::abs(2.0 * std_normal_cdf(x) - 1.0 - error_function(x / std::numbers::sqrt2)), "x=" + num(x));
      rel.see(std::abs(error_function(x) - std::erf(x)), "x=" + num(x));
    }
    for (int i = -20; i <= 20; ++i) {
      const double x = 0.05 * i;
      ser.see(std::abs(error_function(x) - oracle::erf_series(x, 30)), "x=" + num(x));
    }
    out.push_back(make("2 Phi(x) = 1 + erf(x/sqrt 2)", anchors && rel.err <= 1e-12, rel.str()));
    out.push_back(make("erf vs Kummer series", ser.err <= 1e-10, ser.str()));
  }
  return out;
}

// ---------------------------------------------------------------- GOE

namespace {

double i_with_wick(int n, double u) {
  return evaluate(oracle::wick_det_expectation(n), u) + abs_det_correction_eval(abs_det_correction(n), u);
}

}  // namespace

Checks check_goe_exact() {
  Checks out;
  out.push_back(make("Gamma minor examples",
                     gamma_minor_det({1, 1, 1, 1}) == PiScalar(1) && gamma_minor_det({2, 1, 0, 0}) == PiScalar(1) &&
                         gamma_minor_det({1, 2, 1, 1}) == PiScalar(Rational(15, 8), 1)));

  {
    bool ok = j_even_closed(1).exact == PolyQ{Rational(-1, 2), Rational(0), Rational(1)};
    std::string bad;
    for (int m = 1; m <= 4; ++m) {
      auto j = j_even_closed(m).exact;
      if (!j || *j != oracle::wick_det_expectation(2 * m) || j->leading() != 1 || j->degree() != 2 * m)
        bad += " m=" + std::to_string(m);
    }
    out.push_back(make("J_2m closed form vs Wick expansion, m <= 4", ok && bad.empty(), bad));
  }

  {
    Worst w;
    for (int i = -12; i <= 12; ++i) {
      const double u = 0.25 * i;
      w.see(std::abs(i_with_wick(1, u) - oracle::folded_normal_mean(-u, 1.0)), "u=" + num(u));
    }
    bool anchor = std::abs(abs_det_eval(1, 0.0).correction - std::sqrt(2.0 / std::numbers::pi)) <= 1e-15;
    out.push_back(make("I_1 vs folded normal mean", anchor && w.err <= 1e-9, w.str()));
  }

  {
    const AbsDetValue v0 = abs_det_eval(2, 0.0);
    const double q0 = oracle::abs_det_n2_quadrature(0.0);
    const double q1 = oracle::abs_det_n2_quadrature(1.0);
    const double e1 = abs_det_eval(2, 1.0).value;
    bool ok = v0.j_exact && std::abs(v0.value - (std::numbers::sqrt2 - 0.5)) <= 1e-12 &&
              std::abs(v0.value - q0) <= 1e-9 && std::abs(e1 - q1) <= 1e-9;
    out.push_back(make("I_2 vs 2-d quadrature", ok,
                       "I_2(0)=" + num(v0.value) + " quad " + num(q0) + "; I_2(1)=" + num(e1) + " quad " + num(q1)));
  }

  {
    Worst w;
    for (int n = 1; n <= 5; ++n) {
      for (double u : {0.5, 1.0, 2.0}) {
        w.see(std::abs(i_with_wick(n, u) - i_with_wick(n, -u)), "n=" + std::to_string(n) + " u=" + num(u));
      }
    }
    out.push_back(make("I_n(-u) = I_n(u), n <= 5", w.err <= 1e-10, w.str()));
  }

  {
    std::string bad;
    for (int n = 1; n <= 5; ++n) {
      const AbsDetExpr e = abs_det_correction(n);
      const PolyQ j = oracle::wick_det_expectation(n);
      for (int i = -16; i <= 16; ++i) {
        const double u = 0.25 * i;
        const double c = abs_det_correction_eval(e, u);
        const bool tri = std::abs(u) > 3.0 || c + evaluate(j, u) >= std::abs(evaluate(j, u)) - 1e-12;
        if ((c < -1e-12 || !tri) && bad.empty()) bad = "n=" + std::to_string(n) + " u=" + num(u);
      }
    }
    out.push_back(make("I_n - J_n >= 0 and I_n >= |J_n|, n <= 5", bad.empty(), bad));
  }

  {
    Worst w;
    bool shape = true;
    for (int n = 1; n <= 8; ++n) {
      const AbsDetExpr e = abs_det_correction(n);
      shape = shape && (n % 2 == 0) == e.j_even.has_value() && (n % 2 == 1 || e.phi_channel.poly.is_zero());
      for (double u : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.5}) {
        w.see(rel_err(abs_det_correction_eval(e, u), oracle::correction_float(n, u), 1e-12),
              "n=" + std::to_string(n) + " u=" + num(u));
      }
    }
    out.push_back(make("exact correction vs double assembly, n <= 8", shape && w.err <= 1e-10, w.str()));
  }
  return out;
}

// ---------------------------------------------------------------- E(n, p)

Checks check_closed_forms(const std::vector<FixtureRow>& rows) {
  Checks out;
  for (const auto& row : rows) {
    const std::string name = "closed form n=" + std::to_string(row.n);
    if (row.n < 2 || row.n > 12) {
      out.push_back(make(name, false, "row index out of range"));
      continue;
    }
    const RadicalExpr want = fixture_expr(row);
    const RadicalExpr got = expected_redd_symbolic(row.n).expr;
    out.push_back(make(name, got == want, got == want ? render_text(got)
                                                       : "computed " + render_text(got) + " but fixture has " +
                                                             render_text(want)));
  }
  return out;
}

Checks check_value_table() {
  Checks out;
  // the printed row agrees with rounding up to two decimals
  const std::vector<double> row{4, 9.4, 16.26, 24.31, 33.38, 43.38, 54.22, 65.84, 78.19};
  const std::vector<long> dee{4, 15, 40, 85, 156, 259, 400, 585, 820};
  for (int p = 2; p <= 10; ++p) {
    const double e = expected_redd_eval(4, p);
    const double up = std::ceil(e * 100.0 - 1e-9) / 100.0;
    const double want = row[static_cast<std::size_t>(p - 2)];
    const bool ok = std::abs(up - want) <= 1e-9 && std::abs(e - want) <= 0.01;
    out.push_back(make("E(4," + std::to_string(p) + ") vs value table", ok,
                       "E=" + num(e) + " rounded up " + num(up) + " table " + num(want)));
  }
  std::string bad;
  for (int p = 2; p <= 10; ++p) {
    if (complex_edd(4, p) != dee[static_cast<std::size_t>(p - 2)]) bad += " p=" + std::to_string(p);
  }
  out.push_back(make("D(4,p), p = 2..10", bad.empty(), bad));
  return out;
}

namespace {

// Exact value at p = 2, where sqrt(p-1) = 1 and sqrt(3p-2) = 2.
std::optional<Rational> exact_at_two(const RadicalExpr& e) {
  if (e.pi_half != 0) return std::nullopt;
  const Rational two(2);
  return e.c1.evaluate(two) + e.cs.evaluate(two) + e.ct.evaluate(two) * 2 + e.cst.evaluate(two) * 2;
}

}  // namespace

Checks check_structure(int n_max) {
  Checks out;
  for (int n = 2; n <= n_max; ++n) {
    const StructureReport r = structural_decomposition(n);
    std::string degs;
    for (int d : r.degrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
    out.push_back(make("structure n=" + std::to_string(n), r.ok,
                       std::string("pi ") + (r.pi_collapsed ? "cancels" : "survives") + ", field " +
                           (r.in_field ? "ok" : "wrong") + ", degrees [" + degs + "]" +
                           (r.detail.empty() ? "" : "; " + r.detail)));
  }
  {
    std::string bad;
    for (int n = 2; n <= n_max; ++n) {
      auto v = exact_at_two(expected_redd_symbolic(n).expr);
      if (!v || *v != n) bad += " n=" + std::to_string(n);
    }
    out.push_back(make("E(n,2) = n exactly", bad.empty(), bad));
  }
  {
    std::string bad;
    for (int n = 2; n <= n_max; ++n) {
      for (int p = 2; p <= 10; ++p) {
        const double e = expected_redd_eval(n, p);
        const double d = complex_edd(n, p).get_d();
        if (!(e >= 1.0 - 1e-9 && e <= d * (1.0 + 1e-12)) && bad.empty())
          bad = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " E=" + num(e);
      }
    }
    out.push_back(make("1 <= E(n,p) <= D(n,p), p <= 10", bad.empty(), bad));
  }
  return out;
}

Checks check_summand_lemmas() {
  Checks out;
  Worst odd, even_pos, even_zero;
  for (int p0 : {3, 4}) {
    const Rational p(p0);
    const Rational s2 = p / (2 * (p - 1));
    const double x = ((3 * p - 2) / (4 * (p - 1))).to_double();
    const double root = std::sqrt(((3 * p - 2) / (p - 1)).to_double());
    const double r2pi = std::sqrt(2.0 * std::numbers::pi);
    auto E = [&](int k, int l) { return expect_pk_product(k, l, s2).value(); };
    auto F = [&](int a, int b, Rational c, double at) { return evaluate(gauss_f_poly(a, b, c), at); };
    const std::string tag = " p=" + std::to_string(p0);

    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const double lhs = E(2 * j - 1, 2 * i - 1) - E(2 * i - 2, 2 * j);
        const double rhs = gamma_half(Rational(2 * (i + j) - 1, 2)).value() /
                           (r2pi * (3.0 - 2 * i - 2 * j) / (1.0 - 2 * i + 2 * j) * std::pow(-x, i + j - 1)) * root *
                           F(2 - 2 * i, 1 - 2 * j, Rational(5, 2) - Rational(i + j), x);
        odd.see(rel_err(lhs, rhs, 1e-12), "i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
      }
    }
    for (int j = 0; j <= 4; ++j) {
      for (int i = 1; i <= 4; ++i) {
        const double lhs = E(2 * i, 2 * j) - E(2 * i - 1, 2 * j + 1);
        const double rhs = gamma_half(Rational(2 * (i + j) + 1, 2)).value() /
                           (r2pi * (1.0 - 2 * i - 2 * j) / (1.0 - 2 * i + 2 * j) * std::pow(-x, i + j)) * root *
                           F(-2 * j, 1 - 2 * i, Rational(3, 2) - Rational(i + j), x);
        even_pos.see(rel_err(lhs, rhs, 1e-12), "i=" + std::to_string(i) + " j=" + std::to_string(j) + tag);
      }
      const double lhs = E(0, 2 * j) - E(-1, 2 * j + 1);
      const double z = (-(p * p) / ((3 * p - 2) * (p - 2))).to_double();
      const double rhs =
          root * ((j % 2 == 0 ? 1.0 : -1.0) * factorial(2 * j + 1).to_double() /
                      (std::pow(4.0, j) * std::numbers::sqrt2 * factorial(j).to_double()) *
                      (pow(p - 2, j) * p / (pow(p - 1, j) * (3 * p - 2))).to_double() *
                      evaluate(gauss_f_poly(-j, Rational(1, 2), Rational(3, 2)), z) -
                  gamma_half(Rational(2 * j + 1, 2)).value() / (2.0 * r2pi * std::pow(-x, j + 1)));
      even_zero.see(rel_err(lhs, rhs, 1e-12), "j=" + std::to_string(j) + tag);
    }
  }
  out.push_back(make("odd-n summands, 1 <= i, j <= 4", odd.err <= 1e-9, odd.str()));
  out.push_back(make("even-n summands, i >= 1", even_pos.err <= 1e-9, even_pos.str()));
  out.push_back(make("even-n summands, i = 0", even_zero.err <= 1e-9, even_zero.str()));
  return out;
}

Checks check_rendering() {
  Checks out;
  const auto text = [](int n) { return render_text(expected_redd_symbolic(n).expr); };
  out.push_back(make("render n=2", text(2) == "sqrt(3*p - 2)", text(2)));
  out.push_back(make("render n=3", text(3) == "1 + 4*(p - 1)^(3/2)/sqrt(3*p - 2)", text(3)));
  const std::string tex = render_latex(expected_redd_symbolic(4).expr);
  out.push_back(make("render n=4 latex", tex.find("29p^{3} - 63p^{2} + 48p - 12") != std::string::npos &&
                                             tex.find("(3p-2)^{3/2}") != std::string::npos,
                     tex));
  return out;
}

// ---------------------------------------------------------------- samplers

Checks check_samplers() {
  Checks out;
  auto roots = [](std::vector<double> c) { return count_real_projective_roots({static_cast<int>(c.size()) - 1, c}); };
  {
    RootCount a = roots({-1, 0, 1});           // x1^2 - x2^2
    RootCount b = roots({1, 0, 1});            // x1^2 + x2^2
    RootCount c = roots({6, -7, 0, 1});        // (x1 - x2)(x1 - 2x2)(x1 + 3x2)
    RootCount d = roots({0, 0, 1, 0});         // x1^2 x2
    RootCount e = roots({1, 0, 0});            // x2^2: zero at [1:0] only
    bool ok = a.count == 2 && b.count == 0 && c.count == 3 && !c.multiple_root && d.count == 2 && d.multiple_root &&
              e.count == 1;
    out.push_back(make("projective root counting examples", ok));
  }
  {
    SymTensor v{2, 2, {{{0, 0}, 3.0}, {{0, 1}, 5.0}, {{1, 1}, -2.0}}};
    EigenpairForm f = eigenpair_form_n2(v);
    bool ok = !f.degenerate && f.form.degree == 2 && f.form.coeffs == std::vector<double>{5.0, 5.0, -5.0};
    // (x1^2 + x2^2)^2: every point is an eigenvector
    SymTensor w{2, 4, {{{0, 0, 0, 0}, 1.0}, {{0, 0, 0, 1}, 0.0}, {{0, 0, 1, 1}, 1.0 / 3.0}, {{0, 1, 1, 1}, 0.0}, {{1, 1, 1, 1}, 1.0}}};
    EigenpairForm fw = eigenpair_form_n2(w);
    ok = ok && std::all_of(fw.form.coeffs.begin(), fw.form.coeffs.end(), [](double c) { return std::abs(c) < 1e-15; });
    ok = ok && std::abs(bombieri_variance({0, 0, 1}, 2, 3) - 1.0 / 3.0) <= 1e-15 &&
         std::abs(bombieri_variance({0, 1, 2}, 3, 3) - 1.0 / 6.0) <= 1e-15;
    out.push_back(make("eigenpair form and Bombieri variances", ok));
  }
  {
    Rng rng(12345);
    const int N = 20000;
    double sd = 0, so = 0, md = 0;
    for (int k = 0; k < N; ++k) {
      GOESample s = sample_goe(3, 0.5, 1.0, rng);
      md += s.a(1, 1);
      sd += (s.a(0, 0) + 0.5) * (s.a(0, 0) + 0.5);
      so += s.a(0, 2) * s.a(0, 2);
    }
    md /= N, sd /= N, so /= N;
    bool ok = std::abs(md + 0.5) < 0.04 && std::abs(sd - 1.0) < 0.05 && std::abs(so - 0.5) < 0.025;
    out.push_back(make("GOE sampler moments", ok,
                       "diag mean " + num(md) + ", diag var " + num(sd) + ", off-diag var " + num(so)));
  }
  return out;
}

// ---------------------------------------------------------------- Monte Carlo

namespace {

CheckResult band(const std::string& name, const EstimandSpec& spec, const McConfig& mc) {
  EstimatorResult r = estimate(spec, mc.samples, mc.seed, mc.workers);
  auto ref = closed_form_reference(spec, mc.samples, mc.seed, mc.workers);
  if (!ref) return make(name, false, "no reference value");
  const double z = z_score(r, *ref);
  return make(name, std::abs(z) <= 4.0,
              "mean " + num(r.mean) + " +- " + num(r.std_error) + ", reference " + num(ref->value) +
                  (ref->std_error > 0 ? " +- " + num(ref->std_error) : "") + ", z " + num(z));
}

std::string u_tag(double u) { return num(u); }

}  // namespace

Checks check_goe_mc(const McConfig& mc) {
  Checks out;
  for (int n = 1; n <= 5; ++n) {
    for (double u : {0.0, 0.5, 1.0}) {
      out.push_back(band("E|det| GOE n=" + std::to_string(n) + " u=" + u_tag(u), {Estimand::goe_absdet, n, u, 1.0, 2},
                         mc));
    }
  }
  for (double u : {0.0, 1.0}) {
    out.push_back(band("E det GOE n=4 u=" + u_tag(u), {Estimand::goe_det, 4, u, 1.0, 2}, mc));
  }
  return out;
}

Checks check_route_mc(const McConfig& mc) {
  Checks out;
  for (int n = 2; n <= 6; ++n) {
    for (int p = 2; p <= 4; ++p) {
      const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      EstimandSpec spec{Estimand::redd_goe_route, n, 0.0, 1.0, p};
      out.push_back(band("GOE route " + tag, spec, mc));

      EstimatorResult a = estimate(spec, mc.samples, mc.seed, mc.workers);
      spec.kind = Estimand::redd_goe_route_rescaled;
      // same draws: the two estimators differ only by rounding
      EstimatorResult same = estimate(spec, mc.samples, mc.seed, mc.workers);
      EstimatorResult b = estimate(spec, mc.samples, companion_seed(mc.seed), mc.workers);
      const double same_diff = a.mean - same.mean;
      const double se = std::hypot(a.std_error, b.std_error);
      const double diff = a.mean - b.mean;
      out.push_back(make("rescaled route agrees " + tag,
                         std::abs(same_diff) <= 1e-9 * std::abs(a.mean) && std::abs(diff) <= 4.0 * se,
                         "same seed difference " + num(same_diff) + "; independent seed difference " + num(diff) +
                             ", combined stderr " + num(se)));
    }
  }
  return out;
}

Checks check_tensor_mc(const McConfig& mc, std::int64_t samples) {
  Checks out;
  for (int p = 2; p <= 5; ++p) {
    EstimandSpec spec{Estimand::redd_n2, 2, 0.0, 1.0, p};
    EstimatorResult r = estimate(spec, samples, mc.seed, mc.workers);
    const double want = std::sqrt(3.0 * p - 2.0);
    Reference ref{want, 0.0, "sqrt(3p-2)"};
    const double z = z_score(r, ref);
    bool laws = r.histogram.has_value();
    std::string bins;
    if (laws) {
      for (const auto& [count, freq] : r.histogram->bins) {
        bins += " " + std::to_string(count) + ":" + std::to_string(freq);
        if (freq > 0 && ((count - p) % 2 != 0 || count < 1 || count > p)) laws = false;
        if (p == 2 && freq > 0 && count != 2) laws = false;
      }
    }
    out.push_back(make("tensor n=2 p=" + std::to_string(p), laws && std::abs(z) <= 4.0,
                       "mean " + num(r.mean) + " +- " + num(r.std_error) + " vs " + num(want) + ", z " + num(z) +
                           ", counts" + bins + (r.histogram && r.histogram->multiple_root_samples > 0
                                                    ? ", multiple roots " +
                                                          std::to_string(r.histogram->multiple_root_samples)
                                                    : "")));
  }
  return out;
}

Checks check_estimator_properties(const McConfig& mc) {
  Checks out;
  const EstimandSpec spec{Estimand::goe_absdet, 3, 0.5, 1.0, 2};
  const std::int64_t n = std::max<std::int64_t>(mc.samples / 4, 1000);
  EstimatorResult a = estimate(spec, n, mc.seed, mc.workers);
  EstimatorResult b = estimate(spec, n, mc.seed, mc.workers);
  out.push_back(make("estimator reproducible for a fixed seed", a.to_json().dump() == b.to_json().dump()));

  EstimatorResult c = estimate(spec, n, mc.seed, mc.workers == 1 ? 3 : 1);
  const double se = std::hypot(a.std_error, c.std_error);
  out.push_back(make("estimate consistent across worker counts", std::abs(a.mean - c.mean) <= 4.0 * se,
                     "difference " + num(a.mean - c.mean) + ", combined stderr " + num(se)));

  EstimandSpec neg = spec;
  neg.u = -spec.u;
  EstimatorResult d = estimate(neg, n, mc.seed + 1, mc.workers);
  const double se2 = std::hypot(a.std_error, d.std_error);
  out.push_back(make("E|det| symmetric under u -> -u", std::abs(a.mean - d.mean) <= 4.0 * se2,
                     "difference " + num(a.mean - d.mean) + ", combined stderr " + num(se2)));
  return out;
}

// ---------------------------------------------------------------- driver

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  return f;
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = level == VerifyLevel::full ? "full" : "fast";
  j["seed"] = mc.seed;
  j["workers"] = mc.workers;
  if (level == VerifyLevel::full) j["samples"] = mc.samples;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(arr);
  j["n_checks"] = checks.size();
  j["n_failed"] = failures();
  j["passed"] = passed();
  return j;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport rep;
  rep.level = opts.level;
  rep.mc = opts.mc;
  auto run = [&](const std::string& group, const std::function<Checks()>& fn) {
    try {
      for (auto& c : fn()) rep.checks.push_back(std::move(c));
    } catch (const std::exception& e) {
      rep.checks.push_back(make(group, false, std::string("exception: ") + e.what()));
    }
  };
  run("special functions", check_special_functions);
  run("GOE closed forms", check_goe_exact);
  run("closed forms", [&] {
    return check_closed_forms(parse_closed_forms(opts.fixture_json ? *opts.fixture_json : closed_forms_fixture_json()));
  });
  run("value table", check_value_table);
  run("structure", [] { return check_structure(12); });
  run("summands", check_summand_lemmas);
  run("rendering", check_rendering);
  run("samplers", check_samplers);
  if (opts.level == VerifyLevel::full) {
    run("GOE Monte Carlo", [&] { return check_goe_mc(opts.mc); });
    run("GOE route Monte Carlo", [&] { return check_route_mc(opts.mc); });
    run("tensor Monte Carlo", [&] { return check_tensor_mc(opts.mc); });
    run("estimator properties", [&] { return check_estimator_properties(opts.mc); });
  }
  return rep;
}

}  // namespace redd
