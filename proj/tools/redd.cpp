// redd: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "redd/edd_formula.hpp"
#include "redd/monte_carlo.hpp"
#include "redd/render.hpp"
#include "redd/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("REDD_KIT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("REDD_KIT_SEED is not an unsigned integer: ") + env);
  }
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

redd::TableFormat parse_format(const std::string& f) {
  if (f == "text") return redd::TableFormat::text;
  if (f == "latex") return redd::TableFormat::latex;
  return redd::TableFormat::json;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_n(int n) {
  if (n < 2 || n > 12) throw UsageError("n must satisfy 2 <= n <= 12, got " + std::to_string(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected number of real critical rank-one approximations of Gaussian symmetric tensors"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "latex", "json"};

  int n = 0;
  std::string format = "text";
  auto* formula = app.add_subcommand("formula", "closed form of E(n,p)");
  formula->add_option("--n", n, "number of variables")->required();
  formula->add_option("--format", format)->check(CLI::IsMember(formats));

  int n_from = 2, n_to = 9;
  auto* table = app.add_subcommand("table", "E(n,p) for a range of n");
  table->add_option("--from", n_from)->capture_default_str();
  table->add_option("--to", n_to)->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember(formats));

  std::string p_text;
  std::string num_format = "text";
  auto* eval = app.add_subcommand("eval", "numeric E(n,p)");
  eval->add_option("--n", n)->required();
  eval->add_option("--p", p_text, "degree (rational, e.g. 3 or 7/2)")->required();
  eval->add_option("--format", num_format)->check(CLI::IsMember({"text", "json"}));

  int p_int = 0;
  auto* dcmd = app.add_subcommand("d", "complex count D(n,p)");
  dcmd->add_option("--n", n)->required();
  dcmd->add_option("--p", p_int)->required();
  dcmd->add_option("--format", num_format)->check(CLI::IsMember({"text", "json"}));

  std::string estimand;
  redd::EstimandSpec spec;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string mc_format = "json";
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
  mc->add_option("estimand", estimand, "goe-absdet | goe-det | redd-goe-route | redd-goe-route-rescaled | redd-n2")
      ->required();
  mc->add_option("--n", spec.n);
  mc->add_option("--u", spec.u);
  mc->add_option("--sigma2", spec.sigma2);
  mc->add_option("--p", spec.p);
  mc->add_option("--samples", samples)->capture_default_str();
  auto* mc_seed = mc->add_option("--seed", seed);
  mc->add_option("--workers", workers);
  mc->add_option("--format", mc_format)->check(CLI::IsMember({"json", "csv"}));

  std::string level = "fast";
  std::string fixture, out_path;
  std::int64_t verify_samples = 200000;
  auto* verify = app.add_subcommand("verify", "run the identity and cross-validation suite");
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));
  auto* verify_seed = verify->add_option("--seed", seed);
  verify->add_option("--workers", workers);
  verify->add_option("--samples", verify_samples, "Monte Carlo samples per check")->capture_default_str();
  verify->add_option("--fixture", fixture, "closed-form fixture JSON replacing the built-in one");
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*formula) {
      check_n(n);
      const auto e = redd::expected_redd_symbolic(n);
      if (format == "json") {
        json j;
        j["n"] = n;
        j["text"] = redd::render_text(e.expr);
        j["latex"] = redd::render_latex(e.expr);
        j["expr"] = redd::radical_to_json(e.expr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (format == "latex" ? redd::render_latex(e.expr) : redd::render_text(e.expr)) << "\n";
      }
      return 0;
    }
    if (*table) {
      if (n_from < 2 || n_to > 12 || n_from > n_to) throw UsageError("need 2 <= from <= to <= 12");
      std::cout << redd::emit_table(n_from, n_to, parse_format(format));
      return 0;
    }
    if (*eval) {
      if (n < 2) throw UsageError("n must be at least 2");
      const redd::Rational p0 = redd::Rational::parse(p_text);
      if (p0 < 2) throw UsageError("p must be at least 2");
      const double v = redd::expected_redd_eval(n, p0);
      if (num_format == "json") {
        std::cout << json{{"n", n}, {"p", p0.to_string()}, {"value", v}}.dump() << "\n";
      } else {
        std::cout << std::fixed << std::setprecision(12) << v << "\n";
      }
      return 0;
    }
    if (*dcmd) {
      if (n < 1 || p_int < 2) throw UsageError("need n >= 1 and p >= 2");
      const redd::Integer d = redd::complex_edd(n, p_int);
      if (num_format == "json") {
        std::cout << json{{"n", n}, {"p", p_int}, {"value", redd::integer_to_json(d)}}.dump() << "\n";
      } else {
        std::cout << d.get_str() << "\n";
      }
      return 0;
    }
    if (*mc) {
      auto kind = redd::parse_estimand(estimand);
      if (!kind) throw UsageError("unknown estimand " + estimand);
      spec.kind = *kind;
      if (kind == redd::Estimand::redd_n2 && spec.n == 1) spec.n = 2;
      if (mc_format == "csv" && kind != redd::Estimand::redd_n2) throw UsageError("csv output is for redd-n2 only");
      if (mc_seed->count() == 0) seed = default_seed();
      if (workers <= 0) workers = default_workers();
      const redd::EstimatorResult r = redd::estimate(spec, samples, seed, workers);
      if (mc_format == "csv") {
        std::cout << r.histogram->to_csv();
        return 0;
      }
      json j = r.to_json();
      if (auto ref = redd::closed_form_reference(spec, samples, seed, workers)) {
        j["reference"] = {{"value", ref->value}, {"stderr", ref->std_error}, {"source", ref->source}};
        j["z_score"] = redd::z_score(r, *ref);
      } else {
        j["reference"] = nullptr;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      redd::VerifyOptions opts;
      opts.level = level == "full" ? redd::VerifyLevel::full : redd::VerifyLevel::fast;
      opts.mc.seed = verify_seed->count() > 0 ? seed : default_seed();
      opts.mc.workers = workers > 0 ? workers : default_workers();
      if (verify_samples < 100) throw UsageError("--samples must be at least 100");
      opts.mc.samples = verify_samples;
      if (!fixture.empty()) opts.fixture_json = read_file(fixture);
      const redd::VerifyReport rep = redd::run_verify(opts);
      const std::string text = rep.to_json().dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw UsageError("cannot write " + out_path);
        out << text;
      }
      for (const auto& c : rep.checks) {
        if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
      }
      std::cerr << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
      return rep.passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
