#include "redd/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace redd {

namespace {

struct Factor {
  PolyQ poly;  // primitive, integer coefficients, positive leading coefficient
  int power = 1;
};

// c * prod num^e / prod den^e * (p-1)^(half_pm1/2) * (3p-2)^(half_p3/2)
struct FactoredTerm {
  Rational c;
  std::vector<Factor> num, den;
  int half_pm1 = 0;
  int half_p3 = 0;
};

Integer lcm_denominators(const PolyQ& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  return l;
}

PolyQ primitive_part(const PolyQ& f) {
  PolyQ g = f * Rational(lcm_denominators(f));
  Integer content = 0;
  for (const auto& c : g.coefficients()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.numerator().get_mpz_t());
  Rational scale(Integer(1), content);
  if (g.leading().sign() < 0) scale = -scale;
  return g * scale;
}

int strip_root(PolyQ& f, const PolyQ& lin) {
  int k = 0;
  while (f.degree() >= 1) {
    auto [q, r] = divmod(f, lin);
    if (!r.is_zero()) break;
    f = q;
    ++k;
  }
  return k;
}

// Yun's square-free factorisation of a non-constant polynomial (monic factors).
std::vector<Factor> squarefree(const PolyQ& f) {
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  PolyQ fp = derivative(f);
  PolyQ c = gcd(f, fp);
  PolyQ w = divmod(f, c).first;
  PolyQ y = divmod(fp, c).first;
  PolyQ z = y - derivative(w);
  for (int i = 1; w.degree() >= 1; ++i) {
    PolyQ g = gcd(w, z);
    if (g.degree() >= 1) out.push_back({primitive_part(g), i});
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
  }
  return out;
}

Rational lc_product(const std::vector<Factor>& fs) {
  Rational r(1);
  for (const auto& f : fs) r *= pow(f.poly.leading(), f.power);
  return r;
}

FactoredTerm factor(const RatFunc& coeff, int s_power, int t_power) {
  FactoredTerm ft;
  const PolyQ pm1{Rational(-1), Rational(1)};
  const PolyQ p3{Rational(-2), Rational(3)};
  PolyQ num = coeff.num();
  PolyQ den = coeff.den();
  const int a1 = strip_root(num, pm1) - strip_root(den, pm1);
  const int a3n = strip_root(num, p3);
  const int a3d = strip_root(den, p3);
  ft.half_pm1 = 2 * a1 + s_power;
  ft.half_p3 = 2 * (a3n - a3d) + t_power;
  ft.num = squarefree(num);
  ft.den = squarefree(den);
  auto order = [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.power < b.power;
  };
  std::sort(ft.num.begin(), ft.num.end(), order);
  std::sort(ft.den.begin(), ft.den.end(), order);
  // leading coefficients of the stripped parts: (3p-2) contributes 3 per power
  Rational lc_num = lc_product(ft.num) * pow(Rational(3), a3n);
  Rational lc_den = lc_product(ft.den) * pow(Rational(3), a3d);
  ft.c = (coeff.num().leading() / coeff.den().leading()) / (lc_num / lc_den);
  return ft;
}

int term_count(const PolyQ& f) {
  return static_cast<int>(std::count_if(f.coefficients().begin(), f.coefficients().end(),
                                        [](const Rational& c) { return !c.is_zero(); }));
}

std::string poly_latex(const PolyQ& f) {
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
    if (k == 0 || a != Rational(1)) os << a;
    if (k >= 1) os << "p";
    if (k >= 2) os << "^{" << k << "}";
    first = false;
  }
  return os.str();
}

struct Style {
  bool latex = false;
};

// base^(half/2) with half > 0
std::string power_item(const std::string& base, bool multi, int half, bool alone, const Style& st) {
  if (half == 1) return st.latex ? "\\sqrt{" + base + "}" : "sqrt(" + base + ")";
  std::string b = (multi && !(alone && half == 2)) ? "(" + base + ")" : base;
  if (half == 2) return b;
  std::string e = half % 2 == 0 ? std::to_string(half / 2) : std::to_string(half) + "/2";
  if (st.latex) return b + "^{" + e + "}";
  return b + "^" + (half % 2 == 0 ? e : "(" + e + ")");
}

std::string render_term(const FactoredTerm& ft, const Style& st) {
  const std::string pm1_s = st.latex ? "p-1" : "p - 1";
  const std::string p3_s = st.latex ? "3p-2" : "3*p - 2";
  auto poly_s = [&](const PolyQ& f) { return st.latex ? poly_latex(f) : poly_to_string(f); };

  struct Item {
    std::string base;
    bool multi;
    int half;
  };
  std::vector<Item> num, den;
  for (const auto& f : ft.num) num.push_back({poly_s(f.poly), term_count(f.poly) > 1, 2 * f.power});
  for (const auto& f : ft.den) den.push_back({poly_s(f.poly), term_count(f.poly) > 1, 2 * f.power});
  if (ft.half_pm1 > 0) num.push_back({pm1_s, true, ft.half_pm1});
  if (ft.half_pm1 < 0) den.push_back({pm1_s, true, -ft.half_pm1});
  if (ft.half_p3 > 0) num.push_back({p3_s, true, ft.half_p3});
  if (ft.half_p3 < 0) den.push_back({p3_s, true, -ft.half_p3});

  const Rational a = abs(ft.c);
  const Integer cn = a.numerator();
  const Integer cd = a.denominator();
  const std::string sep = st.latex ? "" : "*";

  std::vector<std::string> ns, ds;
  if (cn != 1 || num.empty()) ns.push_back(cn.get_str());
  if (cd != 1) ds.push_back(cd.get_str());
  const bool alone = num.size() == 1 && ns.empty() && (st.latex || (den.empty() && ds.empty()));
  for (const auto& it : num) ns.push_back(power_item(it.base, it.multi, it.half, alone, st));
  for (const auto& it : den) ds.push_back(power_item(it.base, it.multi, it.half, false, st));

  auto join = [&](const std::vector<std::string>& v) {
    std::string r;
    for (std::size_t k = 0; k < v.size(); ++k) r += (k ? sep : "") + v[k];
    return r;
  };
  std::string out = ft.c.sign() < 0 ? "-" : "";
  if (ds.empty()) return out + join(ns);
  if (st.latex) return out + "\\frac{" + join(ns) + "}{" + join(ds) + "}";
  std::string d = join(ds);
  if (ds.size() > 1) d = "(" + d + ")";
  return out + join(ns) + "/" + d;
}

std::string render(const RadicalExpr& e, const Style& st) {
  std::vector<std::string> terms;
  const std::pair<const RatFunc*, std::pair<int, int>> parts[] = {
      {&e.c1, {0, 0}}, {&e.cs, {1, 0}}, {&e.ct, {0, 1}}, {&e.cst, {1, 1}}};
  for (const auto& [c, st_pow] : parts) {
    if (c->is_zero()) continue;
    terms.push_back(render_term(factor(*c, st_pow.first, st_pow.second), st));
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k][0] == '-') {
      out += " - " + terms[k].substr(1);
    } else {
      out += " + " + terms[k];
    }
  }
  if (e.pi_half != 0 && !e.is_zero()) {
    std::string pe = e.pi_half % 2 == 0 ? std::to_string(e.pi_half / 2) : std::to_string(e.pi_half) + "/2";
    out = st.latex ? "\\pi^{" + pe + "}\\left(" + out + "\\right)" : "pi^(" + pe + ")*(" + out + ")";
  }
  return out;
}

nlohmann::ordered_json rational_json(const Rational& q) { return q.to_string(); }

nlohmann::ordered_json scaled_poly_json(const ScaledPoly& sp) {
  nlohmann::ordered_json j;
  j["scale"] = pi_scalar_to_json(sp.scale);
  nlohmann::ordered_json c = nlohmann::ordered_json::array();
  for (const auto& v : sp.poly.coefficients()) c.push_back(rational_json(v));
  j["coeffs"] = c;
  return j;
}

}  // namespace

std::string render_text(const RadicalExpr& e) { return render(e, Style{false}); }
std::string render_latex(const RadicalExpr& e) { return render(e, Style{true}); }

nlohmann::ordered_json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

nlohmann::ordered_json ratfunc_to_json(const RatFunc& f) {
  Integer l = lcm_denominators(f.num());
  Integer ld = lcm_denominators(f.den());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
  Integer g = 0;
  for (const PolyQ* poly : {&f.num(), &f.den()}) {
    for (const auto& c : poly->coefficients()) {
      Integer v = (c * Rational(l)).numerator();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  }
  nlohmann::ordered_json j;
  for (const auto& [key, poly] : {std::pair{"num_coeffs", &f.num()}, std::pair{"den_coeffs", &f.den()}}) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : poly->coefficients()) arr.push_back(integer_to_json((c * Rational(l, g)).numerator()));
    j[key] = arr;
  }
  return j;
}

nlohmann::ordered_json radical_to_json(const RadicalExpr& e) {
  nlohmann::ordered_json j;
  j["pi_half_exponent"] = e.pi_half;
  nlohmann::ordered_json b;
  b["one"] = ratfunc_to_json(e.c1);
  b["s"] = ratfunc_to_json(e.cs);
  b["t"] = ratfunc_to_json(e.ct);
  b["st"] = ratfunc_to_json(e.cst);
  j["basis"] = b;
  return j;
}

nlohmann::ordered_json pi_scalar_to_json(const PiScalar& c) {
  nlohmann::ordered_json j;
  j["q"] = rational_json(c.q());
  j["sqrt_pi_exponent"] = c.h();
  j["sqrt2_exponent"] = c.root2();
  return j;
}

nlohmann::ordered_json abs_det_to_json(const AbsDetExpr& e) {
  nlohmann::ordered_json j;
  j["n"] = e.n;
  if (e.j_even) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (const auto& v : e.j_even->coefficients()) c.push_back(rational_json(v));
    j["j_exact"] = c;
  } else {
    j["j_exact"] = "odd-J-numeric";
  }
  j["exp_channel"] = scaled_poly_json(e.exp_channel);
  j["phi_channel"] = scaled_poly_json(e.phi_channel);
  return j;
}

}  // namespace redd
