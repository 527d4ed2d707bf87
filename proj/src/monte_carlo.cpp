#include "redd/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "redd/edd_formula.hpp"
#include "redd/exact/polynomial.hpp"
#include "redd/goe_expectations.hpp"
#include "redd/special_functions.hpp"

namespace redd {

GOESample sample_goe(int n, double u, double sigma2, Rng& rng) {
  if (n < 1 || !(sigma2 > 0.0)) throw std::invalid_argument("sample_goe: need n >= 1 and sigma2 > 0");
  const double sd_diag = std::sqrt(sigma2);
  const double sd_off = std::sqrt(0.5 * sigma2);
  GOESample s{n, Eigen::MatrixXd(n, n)};
  for (int i = 0; i < n; ++i) {
    s.a(i, i) = rng.normal(sd_diag) - u;
    for (int j = i + 1; j < n; ++j) {
      s.a(i, j) = rng.normal(sd_off);
      s.a(j, i) = s.a(i, j);
    }
  }
  return s;
}

double goe_det(const Eigen::MatrixXd& a) {
  if (a.rows() == 1) return a(0, 0);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
}

double SymTensor::at(std::vector<int> idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = values.find(idx);
  return it == values.end() ? 0.0 : it->second;
}

namespace {

void for_each_class(int n, int p, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(p), 0);
  while (true) {
    fn(idx);
    int k = p - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 1) --k;
    if (k < 0) return;
    const int v = idx[static_cast<std::size_t>(k)] + 1;
    for (int r = k; r < p; ++r) idx[static_cast<std::size_t>(r)] = v;
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double bombieri_variance(const std::vector<int>& sorted_idx, int n, int p) {
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for (int i : sorted_idx) ++alpha[static_cast<std::size_t>(i)];
  double v = 1.0;
  int rest = p;
  // 1 / multinomial(p; alpha)
  for (int a : alpha) {
    v /= binomial(rest, a);
    rest -= a;
  }
  return v;
}

SymTensor sample_bombieri_tensor(int n, int p, Rng& rng) {
  if (n < 1 || p < 1) throw std::invalid_argument("sample_bombieri_tensor: need n >= 1 and p >= 1");
  SymTensor t{n, p, {}};
  for_each_class(n, p, [&](const std::vector<int>& idx) {
    t.values[idx] = rng.normal(std::sqrt(bombieri_variance(idx, n, p)));
  });
  return t;
}

EigenpairForm eigenpair_form_n2(const SymTensor& v) {
  if (v.n != 2) throw std::invalid_argument("eigenpair_form_n2: tensor must have n = 2");
  const int p = v.p;
  // cls[k]: value of the class with k copies of the second index
  std::vector<double> cls(static_cast<std::size_t>(p) + 1);
  for (int k = 0; k <= p; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(p), 0);
    std::fill(idx.end() - k, idx.end(), 1);
    cls[static_cast<std::size_t>(k)] = v.at(idx);
  }
  EigenpairForm out;
  out.form.degree = p;
  out.form.coeffs.assign(static_cast<std::size_t>(p) + 1, 0.0);
  // (v x^(p-1))_1 = sum_k C(p-1,k) cls[k]   x1^(p-1-k) x2^k
  // (v x^(p-1))_2 = sum_k C(p-1,k) cls[k+1] x1^(p-1-k) x2^k
  for (int k = 0; k <= p - 1; ++k) {
    const double b = binomial(p - 1, k);
    out.form.coeffs[static_cast<std::size_t>(p - 1 - k)] += b * cls[static_cast<std::size_t>(k)];
    out.form.coeffs[static_cast<std::size_t>(p - k)] -= b * cls[static_cast<std::size_t>(k + 1)];
  }
  out.degenerate = std::all_of(out.form.coeffs.begin(), out.form.coeffs.end(), [](double c) { return c == 0.0; });
  return out;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int distinct_real_roots(const PolyQ& sqf) {
  if (sqf.degree() < 1) return 0;
  std::vector<PolyQ> chain{sqf, derivative(sqf)};
  while (chain.back().degree() > 0) {
    PolyQ r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& q : chain) {
    const int s = q.leading().sign();
    at_pos.push_back(s);
    at_neg.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

}  // namespace

RootCount count_real_projective_roots(const BinaryForm& f) {
  if (static_cast<int>(f.coeffs.size()) != f.degree + 1) throw std::invalid_argument("BinaryForm: bad length");
  std::vector<Rational> c;
  for (double v : f.coeffs) c.push_back(Rational::from_double(v));
  PolyQ g(c);  // f(x, 1)
  if (g.is_zero()) throw std::invalid_argument("count_real_projective_roots: zero form");
  RootCount out;
  PolyQ d = gcd(g, derivative(g));
  out.multiple_root = d.degree() >= 1;
  PolyQ sqf = out.multiple_root ? divmod(g, d).first : g;
  out.count = distinct_real_roots(sqf);
  if (g.degree() < f.degree) ++out.count;  // x2 | f: the point [1:0]
  return out;
}

std::string estimand_name(Estimand e) {
  switch (e) {
    case Estimand::goe_absdet: return "goe-absdet";
    case Estimand::goe_det: return "goe-det";
    case Estimand::redd_goe_route: return "redd-goe-route";
    case Estimand::redd_goe_route_rescaled: return "redd-goe-route-rescaled";
    case Estimand::redd_n2: return "redd-n2";
  }
  return "";
}

std::optional<Estimand> parse_estimand(const std::string& s) {
  for (Estimand e : {Estimand::goe_absdet, Estimand::goe_det, Estimand::redd_goe_route,
                     Estimand::redd_goe_route_rescaled, Estimand::redd_n2}) {
    if (estimand_name(e) == s) return e;
  }
  return std::nullopt;
}

std::string Histogram::to_csv() const {
  std::ostringstream os;
  os << "count,frequency\n";
  for (const auto& [k, v] : bins) os << k << "," << v << "\n";
  return os.str();
}

nlohmann::ordered_json EstimatorResult::to_json() const {
  nlohmann::ordered_json j;
  j["estimand"] = estimand;
  j["params"] = params;
  j["mean"] = mean;
  j["stderr"] = std_error;
  j["n_samples"] = n_samples;
  j["seed"] = seed;
  j["workers"] = workers;
  return j;
}

namespace {

struct Accumulator {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
  Histogram hist;

  void push(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    const std::int64_t n = count + o.count;
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(n);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / static_cast<double>(n);
    count = n;
    for (const auto& [k, v] : o.hist.bins) hist.bins[k] += v;
    hist.multiple_root_samples += o.hist.multiple_root_samples;
  }
};

void validate(const EstimandSpec& s) {
  switch (s.kind) {
    case Estimand::goe_absdet:
    case Estimand::goe_det:
      if (s.n < 1) throw std::invalid_argument("goe estimands need n >= 1");
      if (!(s.sigma2 > 0.0)) throw std::invalid_argument("goe estimands need sigma2 > 0");
      if (!std::isfinite(s.u)) throw std::invalid_argument("u must be finite");
      break;
    case Estimand::redd_goe_route:
    case Estimand::redd_goe_route_rescaled:
      if (s.n < 2 || s.p < 2) throw std::invalid_argument("redd-goe-route needs n >= 2 and p >= 2");
      break;
    case Estimand::redd_n2:
      if (s.n != 2) throw std::invalid_argument("redd-n2 is only defined for n = 2");
      if (s.p < 1) throw std::invalid_argument("redd-n2 needs p >= 1");
      break;
  }
}

nlohmann::ordered_json params_json(const EstimandSpec& s) {
  nlohmann::ordered_json j;
  switch (s.kind) {
    case Estimand::goe_absdet:
    case Estimand::goe_det:
      j["n"] = s.n;
      j["u"] = s.u;
      j["sigma2"] = s.sigma2;
      break;
    case Estimand::redd_goe_route:
    case Estimand::redd_goe_route_rescaled:
      j["n"] = s.n;
      j["p"] = s.p;
      break;
    case Estimand::redd_n2:
      j["n"] = 2;
      j["p"] = s.p;
      break;
  }
  return j;
}

void run_worker(const EstimandSpec& s, std::int64_t count, Rng rng, Accumulator& acc) {
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const int m = s.n - 1;
  const double gamma_n2 = std::tgamma(0.5 * s.n);
  const double route_c = sqrt_pi / (std::pow(std::numbers::sqrt2, m) * gamma_n2);
  const double rescaled_c = sqrt_pi * std::pow(std::sqrt(s.p - 1.0), m) / gamma_n2;
  for (std::int64_t k = 0; k < count; ++k) {
    switch (s.kind) {
      case Estimand::goe_absdet:
        acc.push(std::abs(goe_det(sample_goe(s.n, s.u, s.sigma2, rng).a)));
        break;
      case Estimand::goe_det:
        acc.push(goe_det(sample_goe(s.n, s.u, s.sigma2, rng).a));
        break;
      case Estimand::redd_goe_route: {
        const double w = rng.normal();
        Eigen::MatrixXd a = sample_goe(m, 0.0, 1.0, rng).a * (-std::sqrt(2.0 * (s.p - 1)));
        a.diagonal().array() += std::sqrt(static_cast<double>(s.p)) * w;
        acc.push(route_c * std::abs(goe_det(a)));
        break;
      }
      case Estimand::redd_goe_route_rescaled: {
        const double u = std::sqrt(s.p / (2.0 * (s.p - 1))) * rng.normal();
        acc.push(rescaled_c * std::abs(goe_det(sample_goe(m, u, 1.0, rng).a)));
        break;
      }
      case Estimand::redd_n2: {
        EigenpairForm f;
        do {
          f = eigenpair_form_n2(sample_bombieri_tensor(2, s.p, rng));
        } while (f.degenerate);
        RootCount rc = count_real_projective_roots(f.form);
        acc.push(rc.count);
        ++acc.hist.bins[rc.count];
        if (rc.multiple_root) ++acc.hist.multiple_root_samples;
        break;
      }
    }
  }
}

}  // namespace

EstimatorResult estimate(const EstimandSpec& spec, std::int64_t n_samples, std::uint64_t seed, int workers) {
  if (n_samples < 100) throw std::invalid_argument("estimate: need at least 100 samples");
  if (workers < 1) throw std::invalid_argument("estimate: need at least one worker");
  validate(spec);
  std::vector<Accumulator> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (int k = 0; k < workers; ++k) {
    const std::int64_t lo = n_samples * k / workers;
    const std::int64_t hi = n_samples * (k + 1) / workers;
    auto job = [&, k, lo, hi] {
      run_worker(spec, hi - lo, Rng::for_stream(seed, static_cast<std::uint64_t>(k)),
                 parts[static_cast<std::size_t>(k)]);
    };
    if (workers == 1) {
      job();
    } else {
      threads.emplace_back(job);
    }
  }
  for (auto& t : threads) t.join();
  Accumulator total;
  for (const auto& a : parts) total.merge(a);

  EstimatorResult r;
  r.estimand = estimand_name(spec.kind);
  r.params = params_json(spec);
  r.mean = total.mean;
  r.std_error = std::sqrt(total.m2 / static_cast<double>(total.count - 1)) / std::sqrt(static_cast<double>(total.count));
  r.n_samples = total.count;
  r.seed = seed;
  r.workers = workers;
  if (spec.kind == Estimand::redd_n2) r.histogram = total.hist;
  return r;
}

std::uint64_t companion_seed(std::uint64_t seed) {
  std::uint64_t s = seed ^ 0x6a09e667f3bcc909ULL;
  return splitmix64(s);
}

std::optional<Reference> closed_form_reference(const EstimandSpec& spec, std::int64_t n_samples, std::uint64_t seed,
                                               int workers) {
  switch (spec.kind) {
    case Estimand::goe_absdet: {
      if (spec.sigma2 != 1.0) return std::nullopt;
      AbsDetValue v = abs_det_eval(spec.n, spec.u);
      if (v.j_exact) return Reference{v.value, 0.0, "closed form I_n(u)"};
      EstimandSpec js = spec;
      js.kind = Estimand::goe_det;
      EstimatorResult j = estimate(js, n_samples, companion_seed(seed), workers);
      return Reference{v.correction + j.mean, j.std_error, "closed-form correction + signed-determinant estimate of J_n(u)"};
    }
    case Estimand::goe_det: {
      if (spec.sigma2 != 1.0 || spec.n % 2 != 0) return std::nullopt;
      return Reference{evaluate(*j_even_closed(spec.n / 2).exact, spec.u), 0.0, "closed form J_n(u)"};
    }
    case Estimand::redd_goe_route:
    case Estimand::redd_goe_route_rescaled:
      return Reference{expected_redd_eval(spec.n, Rational(spec.p)), 0.0, "closed form E(n,p)"};
    case Estimand::redd_n2:
      if (spec.p < 2) return std::nullopt;
      return Reference{expected_redd_eval(2, Rational(spec.p)), 0.0, "closed form E(2,p)"};
  }
  return std::nullopt;
}

double z_score(const EstimatorResult& r, const Reference& ref) {
  const double se = std::sqrt(r.std_error * r.std_error + ref.std_error * ref.std_error);
  const double d = r.mean - ref.value;
  if (se == 0.0) return std::abs(d) <= 1e-12 * std::max(1.0, std::abs(ref.value)) ? 0.0 : std::copysign(INFINITY, d);
  return d / se;
}

}  // namespace redd
