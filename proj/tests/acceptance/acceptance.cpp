// Acceptance run: one PASS/FAIL line per criterion, failing sub-checks indented below it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>

#include "redd/closed_forms.hpp"
#include "redd/verify.hpp"

using namespace redd;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;
};

Outcome from_checks(const Checks& cs) {
  Outcome o;
  std::size_t ok = 0;
  for (const auto& c : cs) {
    if (c.pass) {
      ++ok;
    } else {
      o.pass = false;
      o.notes.push_back(c.name + ": " + c.detail);
    }
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(cs.size()) + " checks";
  return o;
}

Checks concat(Checks a, const Checks& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Checks select(const Checks& cs, const std::vector<std::string>& names) {
  Checks out;
  for (const auto& c : cs) {
    for (const auto& n : names) {
      if (c.name == n) out.push_back(c);
    }
  }
  if (out.size() != names.size()) out.push_back({"missing check", false, "expected " + std::to_string(names.size())});
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(REDD_BIN) + " " + args + " 2>/dev/null >/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int failures = 0;

void criterion(int k, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.notes.push_back("runtime budget " + std::to_string(static_cast<int>(budget_s)) + " s exceeded");
  }
  if (!o.pass) ++failures;
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " (" << o.summary << ", "
       << std::fixed << std::setprecision(2) << secs << " s)";
  std::cout << line.str() << "\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
}

}  // namespace

int main() {
  const unsigned hw = std::thread::hardware_concurrency();
  const McConfig mc{0, hw == 0 ? 1 : static_cast<int>(hw), 200000};
  std::cout << "seed " << mc.seed << ", workers " << mc.workers << ", samples " << mc.samples << "\n";

  criterion(1, "closed forms of E(n,p) reproduced exactly for n = 2..9", 10.0,
            [] { return from_checks(check_closed_forms(parse_closed_forms(closed_forms_fixture_json()))); });

  criterion(2, "E(4,p) value row (printed digits are E rounded up to 0.01) and D(4,p)", 0,
            [] { return from_checks(check_value_table()); });

  criterion(3, "pi cancellation, field membership, E(n,2) = n, 1 <= E <= D for n <= 12", 0, [] {
    return from_checks(check_structure(12));
  });

  criterion(4, "GOE E|det| vs Monte Carlo and analytic oracles (odd n: J_n from an independent signed-det run)", 120.0,
            [&] {
    Checks exact = select(check_goe_exact(), {"I_1 vs folded normal mean", "I_2 vs 2-d quadrature"});
    return from_checks(concat(exact, check_goe_mc(mc)));
  });

  criterion(5, "GOE route estimators vs E(n,p), n = 2..6, p = 2..4", 0, [&] { return from_checks(check_route_mc(mc)); });

  criterion(6, "real eigenpair counts of n = 2 tensors, p = 2..5", 0, [&] {
    return from_checks(check_tensor_mc(mc, 10000));
  });

  criterion(7, "special function identity suite", 0, [] { return from_checks(check_special_functions()); });

  criterion(8, "verify --level full --seed 0 twice, byte-identical JSON", 300.0, [] {
    const std::string a = std::string(TEST_TMP_DIR) + "/verify_full_a.json";
    const std::string b = std::string(TEST_TMP_DIR) + "/verify_full_b.json";
    std::remove(a.c_str());
    std::remove(b.c_str());
    const int ca = run_cli("verify --level full --seed 0 --out " + a);
    const int cb = run_cli("verify --level full --seed 0 --out " + b);
    const std::string ja = slurp(a), jb = slurp(b);
    Outcome o;
    o.pass = ca == 0 && cb == 0 && !ja.empty() && ja == jb;
    o.summary = "exit codes " + std::to_string(ca) + "," + std::to_string(cb) + ", " + std::to_string(ja.size()) +
                " bytes, " + (ja == jb ? "identical" : "different");
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
