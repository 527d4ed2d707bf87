#include "redd/edd_formula.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "redd/exact/rational_eigen.hpp"
#include "redd/goe_expectations.hpp"
#include "redd/render.hpp"
#include "redd/special_functions.hpp"

namespace redd {

namespace {

const RatFunc P = RatFunc::p();
const RatFunc PM1 = RatFunc::linear(1, -1);
const RatFunc P3M2 = RatFunc::linear(3, -2);

// (3p-2)/(4(p-1))
RatFunc hyp_x() { return P3M2 / (PM1 * RatFunc(4)); }

// sqrt(p-1)^k as (p-1)^(k/2) or (p-1)^((k-1)/2) s
RadicalExpr sqrt_pm1_power(int k) {
  if (k % 2 == 0) return RadicalExpr(pow(PM1, k / 2));
  return RadicalExpr::s() * pow(PM1, (k - 1) / 2);
}

struct Assembly {
  PiGradedRadical total;
  // even n only, already multiplied by the prefactor
  std::vector<PiGradedRadical> hyp;  // the F(-j, 1/2, 3/2, .) part for each j
  PiGradedRadical rest;
};

Assembly assemble_odd(int n) {
  const int m = (n - 1) / 2;
  const RatFunc x = hyp_x();
  PiGradedRadical sum;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      PiScalar c = gamma_minor_det({1, m, i, j}) * gamma_half(Rational(2 * (i + j) - 1, 2));
      c = c * PiScalar(Rational(1 - 2 * i + 2 * j, 3 - 2 * i - 2 * j));
      PolyQ f = gauss_f_poly(Rational(2 - 2 * i), Rational(1 - 2 * j), Rational(5, 2) - Rational(i + j));
      RatFunc term = pow(-x, -(i + j - 1)) * compose(f, x);
      sum.add(RadicalExpr(term) * c);
    }
  }
  const RadicalExpr pre = sqrt_pm1_power(n - 2) * RadicalExpr::t();
  Assembly a;
  a.total = sum * pre * (sqrt_pi() / gamma_half_product(n));
  a.total.add(RadicalExpr(RatFunc(1)));
  return a;
}

Assembly assemble_even(int n) {
  const int m = n / 2;
  const RatFunc x = hyp_x();
  const RatFunc zarg = -(P * P) / (P3M2 * (P - RatFunc(2)));
  const RadicalExpr pre = sqrt_pm1_power(n - 2) * RadicalExpr::t();
  const PiScalar pre_c = PiScalar(1) / gamma_half_product(n);
  Assembly a;
  for (int j = 0; j < m; ++j) {
    const PiScalar d0 = gamma_minor_det({2, m, 0, j});

    PiScalar c1 = sqrt_pi() * d0 * PiScalar(factorial(2 * j + 1) / (pow(Rational(-4), j) * factorial(j)));
    PolyQ f1 = gauss_f_poly(Rational(-j), Rational(1, 2), Rational(3, 2));
    RatFunc t1 = pow(P - RatFunc(2), j) * P / (pow(PM1, j) * P3M2) * compose(f1, zarg);
    PiGradedRadical hyp;
    hyp.add(RadicalExpr(t1) * c1);
    a.hyp.push_back(hyp * pre * pre_c);

    PiGradedRadical rest;
    PiScalar c2 = d0 * gamma_half(Rational(2 * j + 1, 2)) * PiScalar(Rational(-1, 2));
    rest.add(RadicalExpr(pow(-x, -(j + 1))) * c2);
    for (int i = 1; i < m; ++i) {
      PiScalar c3 = gamma_minor_det({2, m, i, j}) * gamma_half(Rational(2 * (i + j) + 1, 2)) *
                    PiScalar(Rational(1 - 2 * i + 2 * j, 1 - 2 * i - 2 * j));
      PolyQ f3 = gauss_f_poly(Rational(-2 * j), Rational(1 - 2 * i), Rational(3, 2) - Rational(i + j));
      rest.add(RadicalExpr(pow(-x, -(i + j)) * compose(f3, x)) * c3);
    }
    a.rest += rest * pre * pre_c;
  }
  for (const auto& h : a.hyp) a.total += h;
  a.total += a.rest;
  return a;
}

Assembly assemble(int n) { return n % 2 == 1 ? assemble_odd(n) : assemble_even(n); }

std::string join_degrees(const std::vector<int>& d) {
  std::ostringstream os;
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
  return os.str();
}

// Solves V a = b exactly; empty if V is singular.
std::optional<std::vector<Rational>> solve_exact(MatrixQ v, std::vector<Rational> b) {
  const Eigen::Index n = v.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    while (piv < n && v(piv, k).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k) {
      v.row(k).swap(v.row(piv));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || v(i, k).is_zero()) continue;
      Rational f = v(i, k) / v(k, k);
      for (Eigen::Index j = k; j < n; ++j) v(i, j) -= f * v(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] / v(k, k);
  return out;
}

}  // namespace

Integer complex_edd(int n, int p) {
  if (n < 1 || p < 2) throw std::domain_error("complex_edd: need n >= 1 and p >= 2");
  Integer sum = 0;
  Integer term = 1;
  for (int i = 0; i < n; ++i) {
    sum += term;
    term *= p - 1;
  }
  return sum;
}

ReddExpr expected_redd_symbolic(int n) {
  if (n < 2) throw std::domain_error("expected_redd_symbolic: n must be >= 2");
  static std::mutex mu;
  static std::map<int, RadicalExpr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return {n, it->second};
  }
  RadicalExpr e = assemble(n).total.collapse(0);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, e);
  return {n, e};
}

double expected_redd_eval(int n, const Rational& p0) {
  if (p0 < Rational(2)) throw std::domain_error("expected_redd_eval: p must be >= 2");
  return radical_eval(expected_redd_symbolic(n).expr, p0);
}

std::optional<PolyQ> fit_polynomial_in(const RatFunc& target, const RatFunc& z, int max_deg) {
  if (max_deg < 0) return target.is_zero() ? std::optional<PolyQ>(PolyQ{}) : std::nullopt;
  // Interpolate at max_deg + 1 sample points with distinct z values, then confirm symbolically.
  std::vector<Rational> zs, vals;
  std::set<Rational> seen;
  for (int k = 0; static_cast<int>(zs.size()) <= max_deg && k < 1000; ++k) {
    Rational p0 = Rational(3) + Rational(k, 7);
    try {
      Rational zv = z.evaluate(p0);
      Rational tv = target.evaluate(p0);
      if (!seen.insert(zv).second) continue;
      zs.push_back(zv);
      vals.push_back(tv);
    } catch (const PoleError&) {
    }
  }
  const auto size = static_cast<Eigen::Index>(zs.size());
  MatrixQ v(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) v(r, c) = pow(zs[static_cast<std::size_t>(r)], static_cast<int>(c));
  }
  auto coeffs = solve_exact(v, vals);
  if (!coeffs) return std::nullopt;
  PolyQ h(*coeffs);
  if (!(compose(h, z) == target)) return std::nullopt;
  return h;
}

StructureReport structural_decomposition(int n) {
  if (n < 2) throw std::domain_error("structural_decomposition: n must be >= 2");
  StructureReport r;
  r.n = n;
  Assembly a = assemble(n);
  RadicalExpr e;
  try {
    e = a.total.collapse(0);
    r.pi_collapsed = true;
  } catch (const std::logic_error& err) {
    r.detail = err.what();
    return r;
  }
  const RatFunc y = RatFunc(4) * PM1 / P3M2;
  std::ostringstream detail;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    r.in_field = e.c1 == RatFunc(1) && e.cs.is_zero() && e.ct.is_zero();
    auto f = fit_polynomial_in(e.cst / pow(PM1, m - 1), y, 2 * m - 1);
    r.degrees = {f ? f->degree() : -1};
    r.degrees_ok = f && f->degree() == 2 * m - 1;
    detail << "E - 1 = s t (p-1)^" << (m - 1) << " f(y), deg f = " << r.degrees[0] << " (expected " << 2 * m - 1
           << ")";
  } else {
    const int m = n / 2;
    r.in_field = e.c1.is_zero() && e.cs.is_zero() && e.cst.is_zero();
    const RatFunc z = P * P / (P3M2 * (P - RatFunc(2)));
    RadicalExpr rest = a.rest.collapse(0);
    bool rest_shape = rest.c1.is_zero() && rest.cs.is_zero() && rest.cst.is_zero();
    // m = 1 admits no split with deg g = 0 (g_0 != 0 forces deg g = 1)
    const int g_deg = m == 1 ? 1 : 2 * m - 2;
    auto g = fit_polynomial_in(rest.ct / pow(PM1, m - 1), y, g_deg);
    r.degrees.push_back(g ? g->degree() : -1);
    r.degrees_ok = rest_shape && g && g->degree() == g_deg;
    for (int j = 0; j < m; ++j) {
      RadicalExpr h = a.hyp[static_cast<std::size_t>(j)].collapse(0);
      bool shape = h.c1.is_zero() && h.cs.is_zero() && h.cst.is_zero();
      // h = p (p-1)^(m-1)/t ((p-2)/(p-1))^j g_j(z), and 1/t = t/(3p-2)
      RatFunc target = h.ct * P3M2 / (P * pow(PM1, m - 1)) * pow(PM1 / (P - RatFunc(2)), j);
      auto gj = fit_polynomial_in(target, z, j);
      r.degrees.push_back(gj ? gj->degree() : -1);
      r.degrees_ok = r.degrees_ok && shape && gj && gj->degree() == j;
    }
    detail << "deg g, deg g_0..g_" << (m - 1) << " = " << join_degrees(r.degrees) << " (expected " << (m == 1 ? 1 : 2 * m - 2);
    for (int j = 0; j < m; ++j) detail << "," << j;
    detail << ")";
  }
  r.ok = r.pi_collapsed && r.in_field && r.degrees_ok;
  r.detail = detail.str();
  return r;
}

std::string emit_table(int n_min, int n_max, TableFormat format) {
  if (n_min < 2 || n_max > 12 || n_min > n_max) {
    throw std::domain_error("emit_table: need 2 <= n_min <= n_max <= 12");
  }
  std::ostringstream os;
  switch (format) {
    case TableFormat::text:
      for (int n = n_min; n <= n_max; ++n) {
        os << "E(" << n << ",p) = " << render_text(expected_redd_symbolic(n).expr) << "\n";
      }
      break;
    case TableFormat::latex:
      os << "\\begin{tabular}{c|l}\n$n$ & $E(n,p)$\\\\\n\\hline\n";
      for (int n = n_min; n <= n_max; ++n) {
        os << n << " & $" << render_latex(expected_redd_symbolic(n).expr) << "$\\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
    case TableFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (int n = n_min; n <= n_max; ++n) {
        const RadicalExpr e = expected_redd_symbolic(n).expr;
        nlohmann::ordered_json j;
        j["n"] = n;
        const nlohmann::ordered_json body = radical_to_json(e);
        for (const auto& [k, v] : body.items()) j[k] = v;
        j["text"] = render_text(e);
        arr.push_back(j);
      }
      os << arr.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace redd
